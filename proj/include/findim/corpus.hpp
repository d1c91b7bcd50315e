#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "findim/algebra.hpp"
#include "findim/io/document.hpp"
#include "findim/module_expr.hpp"
#include "findim/oracle/module.hpp"

namespace findim::corpus {

struct Limits {
  int max_vertices = 5;
  int max_arrows = 8;
  int max_relations = 12;
  std::size_t max_dimension = 40;
};

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Quiver random_quiver(std::mt19937_64& rng, int vertices, int arrows) {
  Quiver q;
  for (int v = 0; v < vertices; ++v) q.add_vertex(std::to_string(v + 1));
  // 'e' is reserved for trivial paths in the text format.
  static const std::string letters = "abcdfghijklmnopqrstuvwxyz";
  for (int k = 0; k < arrows; ++k) {
    std::string name(1, letters[k % letters.size()]);
    if (k >= static_cast<int>(letters.size())) name += std::to_string(k / letters.size());
    q.add_arrow(name, uniform(rng, 0, vertices - 1), uniform(rng, 0, vertices - 1));
  }
  return q;
}

/// All composable arrow pairs, as length-2 paths.
inline std::vector<Path> length_two_paths(const Quiver& q) {
  std::vector<Path> out;
  for (int a = 0; a < q.arrow_count(); ++a)
    for (int b = 0; b < q.arrow_count(); ++b)
      if (auto p = make_path(q, {a, b})) out.push_back(*p);
  return out;
}

/// A random nonzero path of the algebra with the given length, if one exists.
inline std::optional<Path> random_path(std::mt19937_64& rng, const AlgebraModel& a, std::size_t length) {
  std::vector<int> pool;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (a.path(static_cast<int>(i)).length() == length) pool.push_back(static_cast<int>(i));
  if (pool.empty()) return std::nullopt;
  return a.path(pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)]);
}

/// Seeded random finite-dimensional monomial algebra within the limits. Relations are added
/// (length 2 to 4, never overlapping) until the algebra is finite-dimensional and small enough.
inline MonomialPresentation random_monomial(std::mt19937_64& rng, const Limits& lim = {}) {
  for (;;) {
    const int n = uniform(rng, 1, lim.max_vertices);
    const int arrows = uniform(rng, 0, 9) == 0 ? 0 : uniform(rng, 1, lim.max_arrows);
    MonomialPresentation p;
    p.quiver = random_quiver(rng, n, arrows);
    bool ok = false;
    for (int round = 0; round <= lim.max_relations; ++round) {
      try {
        const AlgebraModel a(p, 4 * lim.max_dimension);
        if (a.dimension() <= lim.max_dimension) {
          ok = true;
          break;
        }
        // Kill a random surviving path of length 2..4.
        const std::size_t len = static_cast<std::size_t>(uniform(rng, 2, std::min(4, std::max(2, a.loewy_length() - 1))));
        auto r = random_path(rng, a, len);
        if (!r) r = random_path(rng, a, 2);
        if (!r) break;
        p.relations.push_back(*r);
        p.relations = reduce_relations(std::move(p.relations));
      } catch (const Error&) {
        // Infinite or far too large: add a length-2 relation not implied by the others.
        auto pairs = length_two_paths(p.quiver);
        std::vector<Path> fresh;
        for (auto& c : pairs) {
          bool implied = false;
          for (const auto& r : p.relations)
            if (contains_factor(c.arrows, r.arrows) || contains_factor(r.arrows, c.arrows)) implied = true;
          if (!implied) fresh.push_back(c);
        }
        if (fresh.empty()) break;
        p.relations.push_back(fresh[uniform(rng, 0, static_cast<int>(fresh.size()) - 1)]);
        p.relations = reduce_relations(std::move(p.relations));
      }
      if (static_cast<int>(p.relations.size()) > lim.max_relations) break;
    }
    if (ok && static_cast<int>(p.relations.size()) <= lim.max_relations) return p;
  }
}

/// Random algebra with J^2 = 0: every composable pair of arrows is a relation.
inline MonomialPresentation random_radical_square_zero(std::mt19937_64& rng, int max_vertices = 5,
                                                       int max_arrows = 8) {
  MonomialPresentation p;
  p.quiver = random_quiver(rng, uniform(rng, 1, max_vertices), uniform(rng, 0, max_arrows));
  p.relations = length_two_paths(p.quiver);
  return p;
}

/// A random element Σ c_i b_i over parallel basis elements leaving `vertex`, coefficients in [-2, 2].
inline oracle::Element random_element(std::mt19937_64& rng, const BasedAlgebra& alg, int vertex) {
  std::vector<int> from;
  for (int x : alg.elements_from(vertex))
    if (!alg.is_idempotent(x)) from.push_back(x);
  oracle::Element el;
  if (from.empty()) return el;
  const int target = alg.element(from[uniform(rng, 0, static_cast<int>(from.size()) - 1)]).target;
  for (int x : from)
    if (alg.element(x).target == target && uniform(rng, 0, 1)) el.terms.emplace_back(Rational(uniform(rng, 1, 2)), x);
  if (el.terms.empty())
    for (int x : from)
      if (alg.element(x).target == target) {
        el.terms.emplace_back(Rational(1), x);
        break;
      }
  return el;
}

/// Random small module: a simple, a projective, or a cyclic quotient, possibly summed with another.
inline oracle::MatrixModule random_module(std::mt19937_64& rng, const BasedAlgebra& alg) {
  auto one = [&] {
    const int v = uniform(rng, 0, alg.vertex_count() - 1);
    switch (uniform(rng, 0, 3)) {
    case 0: return oracle::simple_module(alg, v);
    case 1: return oracle::projective_module(alg, v);
    default: {
      const auto el = random_element(rng, alg, v);
      if (el.terms.empty()) return oracle::simple_module(alg, v);
      return oracle::cyclic_quotient(alg, el);
    }
    }
  };
  if (uniform(rng, 0, 2) == 0) return oracle::direct_sum(alg, {one(), one()});
  return one();
}

inline Rational random_coefficient(std::mt19937_64& rng) {
  Rational q(uniform(rng, -5, 5), uniform(rng, 1, 3));
  q.canonicalize();
  if (q == 0) q = 1;
  return q;
}

/// Random `.qalg` document: a random monomial algebra plus a few module declarations.
inline io::AlgebraDocument random_document(std::mt19937_64& rng) {
  io::AlgebraDocument doc;
  if (uniform(rng, 0, 1)) doc.name = "A" + std::to_string(uniform(rng, 0, 999));
  Limits lim;
  lim.max_dimension = 30;
  doc.presentation = random_monomial(rng, lim);
  const AlgebraModel a(doc.presentation);
  const int count = uniform(rng, 0, 4);
  for (int k = 0; k < count; ++k) {
    io::ModuleExpr e;
    const int parts = uniform(rng, 1, 3);
    for (int j = 0; j < parts; ++j) {
      io::SummandExpr s;
      const int v = uniform(rng, 0, a.vertex_count() - 1);
      const int kind = uniform(rng, 0, 4);
      if (kind == 0) {
        s = simple_expr(v);
      } else if (kind == 1) {
        s.kind = io::SummandExpr::Kind::projective;
        s.vertex = v;
      } else if (kind == 2 && a.dimension() > static_cast<std::size_t>(a.vertex_count())) {
        s.kind = io::SummandExpr::Kind::ideal;
        s.path = a.path(uniform(rng, a.vertex_count(), static_cast<int>(a.dimension()) - 1));
      } else if (kind == 3 && !doc.modules.empty()) {
        s.kind = io::SummandExpr::Kind::named;
        s.name = doc.modules[uniform(rng, 0, static_cast<int>(doc.modules.size()) - 1)].name;
      } else {
        // Q(v; ...) over paths from v sharing a target, possibly including the trivial path.
        std::vector<int> from = a.paths_from(v);
        const Path& pick = a.path(from[uniform(rng, 0, static_cast<int>(from.size()) - 1)]);
        std::vector<std::pair<Rational, Path>> terms;
        for (int x : from)
          if (a.path(x).target == pick.target && (a.path(x) == pick || uniform(rng, 0, 1)))
            terms.emplace_back(random_coefficient(rng), a.path(x));
        s = quotient_expr(v, std::move(terms));
      }
      e.summands.push_back(std::move(s));
    }
    doc.modules.push_back({"M" + std::to_string(k + 1), std::move(e)});
  }
  return doc;
}

} // namespace findim::corpus
