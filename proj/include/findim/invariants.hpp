#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "findim/algebra.hpp"
#include "findim/based_algebra.hpp"
#include "findim/engine/syzygy.hpp"
#include "findim/module_expr.hpp"
#include "findim/natinf.hpp"
#include "findim/oracle/repetition.hpp"
#include "findim/oracle/resolution.hpp"

namespace findim {

/// A dimension that is finite, infinite, or not settled within a cutoff.
struct Estimate {
  enum class Kind { finite, infinite, undetermined };
  Kind kind = Kind::undetermined;
  int value = 0;
  int cutoff = 0;

  static Estimate finite(int v) { return {Kind::finite, v, 0}; }
  static Estimate infinite() { return {Kind::infinite, 0, 0}; }
  static Estimate undetermined(int cutoff) { return {Kind::undetermined, 0, cutoff}; }
  static Estimate of(const NatInf& x) { return x.finite() ? finite(x.value()) : infinite(); }
  static Estimate of(const oracle::BoundedPdim& p) {
    return p.value ? finite(*p.value) : undetermined(p.cutoff);
  }

  bool is_finite() const { return kind == Kind::finite; }
  bool is_infinite() const { return kind == Kind::infinite; }
  bool determined() const { return kind != Kind::undetermined; }

  std::string str() const {
    switch (kind) {
    case Kind::finite: return std::to_string(value);
    case Kind::infinite: return "infinity";
    case Kind::undetermined: return "undetermined (> " + std::to_string(cutoff) + ")";
    }
    return "";
  }

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

// ---------------------------------------------------------------------------------------------
// s and the finitistic-dimension interval

struct FindimInterval {
  int s = -1;
  int lower = 0;
  int upper = 1;
  /// Basis index of the first path attaining s; empty when s = -1.
  std::optional<int> witness_path;
  /// Q(source(q); q), whose projective dimension is s + 1.
  std::optional<io::ModuleExpr> witness;
  /// s came from a supremum over the empty set.
  bool empty_sup = true;
};

inline std::pair<int, std::optional<int>> s_with_argmax(SyzygyEngine& e) {
  const AlgebraModel& a = e.algebra();
  int s = -1;
  std::optional<int> arg;
  for (int q = a.vertex_count(); q < static_cast<int>(a.dimension()); ++q) {
    const NatInf p = e.pdim(ModuleTerm::ideal(q));
    if (p.finite() && p.value() > s) {
      s = p.value();
      arg = q;
    }
  }
  return {s, arg};
}

inline int compute_s(const AlgebraModel& a) {
  SyzygyEngine e(a);
  return s_with_argmax(e).first;
}

inline FindimInterval findim_interval(SyzygyEngine& e) {
  const AlgebraModel& a = e.algebra();
  FindimInterval out;
  auto [s, arg] = s_with_argmax(e);
  out.s = s;
  out.lower = s + 1;
  out.upper = s + 2;
  out.witness_path = arg;
  out.empty_sup = !arg.has_value();
  if (arg) {
    const Path& q = a.path(*arg);
    out.witness = single(quotient_expr(q.source, {{Rational(1), q}}));
  }
  return out;
}

inline FindimInterval findim_interval(const AlgebraModel& a) {
  SyzygyEngine e(a);
  return findim_interval(e);
}

// ---------------------------------------------------------------------------------------------
// Repetition index on the engine

struct EngineRepetition {
  int value = 0;
  /// Non-projective classes of Ω^0, Ω^1, ... up to the first repeated set.
  std::vector<std::set<int>> class_sets;
  int period_start = 0;
  int period = 1;
};

/// Exact ρ(M): the class-set sequence lives on a finite graph, so it always becomes periodic.
inline EngineRepetition repetition_index(SyzygyEngine& e, const PathIdealSum& m) {
  EngineRepetition r;
  std::set<int> cur;
  for (const auto& [t, mult] : m.terms()) {
    const int c = e.class_of(t);
    if (!e.projective(c)) cur.insert(c);
  }
  std::map<std::set<int>, int> seen;
  for (int k = 0;; ++k) {
    auto [it, inserted] = seen.emplace(cur, k);
    r.class_sets.push_back(cur);
    if (!inserted) {
      r.period_start = it->second;
      r.period = k - it->second;
      break;
    }
    std::set<int> next;
    for (int c : cur)
      for (auto [child, mult] : e.children(c))
        if (!e.projective(child)) next.insert(child);
    cur = std::move(next);
  }
  std::set<int> recurrent;
  for (int k = r.period_start; k < r.period_start + r.period; ++k)
    recurrent.insert(r.class_sets[k].begin(), r.class_sets[k].end());
  for (int k = 0; k <= r.period_start; ++k)
    if (std::includes(recurrent.begin(), recurrent.end(), r.class_sets[k].begin(), r.class_sets[k].end())) {
      r.value = k;
      break;
    }
  return r;
}

inline int repetition_index(const AlgebraModel& a, const PathIdealSum& m) {
  SyzygyEngine e(a);
  return repetition_index(e, m).value;
}

inline PathIdealSum all_simples(const AlgebraModel& a) {
  PathIdealSum m;
  for (int v = 0; v < a.vertex_count(); ++v) m.add(ModuleTerm::simple(v));
  return m;
}

struct IzBounds {
  int rho_right = 0;
  std::size_t dim_J = 0;
  bool dimJ_check = true; // rho_right <= dim_k J
};

/// ρ of the right module Λ/J, computed as the left module over the opposite algebra.
inline IzBounds iz_bounds(const AlgebraModel& a) {
  const AlgebraModel op = opposite(a);
  IzBounds b;
  b.rho_right = repetition_index(op, all_simples(op));
  b.dim_J = a.radical_dimension();
  b.dimJ_check = static_cast<std::size_t>(b.rho_right) <= b.dim_J;
  return b;
}

// ---------------------------------------------------------------------------------------------
// Bound formulas

struct BoundEntry {
  std::string name;
  std::string hypothesis;
  bool holds = false;
  std::optional<int> value; // present only when the hypothesis holds and inputs are determined
  std::string note;
};

struct BoundsReport {
  std::vector<BoundEntry> entries;

  const BoundEntry& get(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return e;
    throw std::out_of_range("no bound named " + name);
  }
};

struct BoundsInput {
  int n = 0;
  int loewy_length = 1;
  std::size_t dim_J = 0;
  std::vector<Estimate> simple_pdims;
  std::optional<int> rho_right;
  bool tiled = false;
  /// fin dim Λ when it is known exactly; used by the tiled shift.
  std::optional<int> findim_lambda;
};

inline BoundsReport classical_bounds(const BoundsInput& in) {
  BoundsReport r;
  bool all_determined = true;
  int sup_finite = -1;
  int infinite = 0;
  for (const auto& p : in.simple_pdims) {
    if (!p.determined()) all_determined = false;
    else if (p.is_finite()) sup_finite = std::max(sup_finite, p.value);
    else ++infinite;
  }
  const bool empty = sup_finite < 0;
  const std::string empty_note = "sup over the empty set taken as -1";
  const bool j2 = in.loewy_length <= 2;
  const bool j3 = in.loewy_length <= 3;

  BoundEntry m{"mochizuki_j2", "J^2 = 0", j2, std::nullopt, ""};
  if (j2 && all_determined) {
    m.value = 1 + sup_finite;
    if (empty) m.note = empty_note;
  } else if (j2) {
    m.note = "simple pdims undetermined";
  }
  r.entries.push_back(m);

  BoundEntry mixed{"gzh_mixed_j3", "J^3 = 0", j3, std::nullopt, ""};
  if (j3 && all_determined) {
    mixed.value = 1 + sup_finite + 2 * infinite;
    if (empty) mixed.note = empty_note;
  } else if (j3) {
    mixed.note = "simple pdims undetermined";
  }
  r.entries.push_back(mixed);

  const bool all_infinite = all_determined && infinite == in.n && in.n > 0;
  BoundEntry two_n{"gzh_2n_j3", "J^3 = 0 and every simple has infinite pdim", j3 && all_infinite, std::nullopt, ""};
  if (two_n.holds) two_n.value = 2 * in.n;
  r.entries.push_back(two_n);

  BoundEntry sq{"gzh_n2plus1_j3", "J^3 = 0", j3, std::nullopt, ""};
  if (j3) sq.value = in.n * in.n + 1;
  r.entries.push_back(sq);

  BoundEntry rho{"iz_rho_right", "rho((Lambda/J)_Lambda) determined", in.rho_right.has_value(), in.rho_right, ""};
  r.entries.push_back(rho);

  r.entries.push_back({"iz_dimJ", "always", true, static_cast<int>(in.dim_J), ""});

  BoundEntry shift{"tiled_shift", "input is a tiled order", in.tiled, std::nullopt, ""};
  if (in.tiled && in.findim_lambda) {
    shift.value = 1 + *in.findim_lambda;
    shift.note = "fin dim O = 1 + fin dim Lambda";
  } else if (in.tiled) {
    shift.note = "fin dim Lambda not determined";
  }
  r.entries.push_back(shift);
  return r;
}

inline BoundsReport classical_bounds(const AlgebraModel& a, const std::vector<Estimate>& simple_pdims) {
  BoundsInput in;
  in.n = a.vertex_count();
  in.loewy_length = a.loewy_length();
  in.dim_J = a.radical_dimension();
  in.simple_pdims = simple_pdims;
  in.rho_right = iz_bounds(a).rho_right;
  return classical_bounds(in);
}

// ---------------------------------------------------------------------------------------------
// Oracle search for modules of large finite projective dimension

struct FindimWitness {
  int pdim = 0;
  std::string description;
};

/// Largest finite oracle pdim among simples, Λe_i/Λb, Λe_i/Λ(b + b') for parallel b, b', and
/// Λe_i/(Λb + Λb'). Stops once `stop_at` is reached.
inline FindimWitness findim_search(const BasedAlgebra& alg, int cutoff, std::optional<int> stop_at = std::nullopt,
                                   std::size_t max_candidates = 2000) {
  FindimWitness best{0, "P(" + alg.vertex_names().front() + ")"};
  std::size_t tried = 0;
  auto consider = [&](const oracle::MatrixModule& m, const std::string& what) {
    ++tried;
    const auto p = oracle::pdim_upto(alg, m, cutoff);
    if (p.value && *p.value > best.pdim) best = {*p.value, what};
    return stop_at && best.pdim >= *stop_at;
  };
  auto name = [&](int x) { return alg.element(x).name; };
  for (int v = 0; v < alg.vertex_count(); ++v)
    if (consider(oracle::simple_module(alg, v), "S(" + alg.vertex_names()[v] + ")")) return best;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    std::vector<int> from;
    for (int x : alg.elements_from(v))
      if (!alg.is_idempotent(x)) from.push_back(x);
    const std::string top = alg.vertex_names()[v];
    for (int x : from) {
      oracle::Element el;
      el.terms.emplace_back(Rational(1), x);
      if (consider(oracle::cyclic_quotient(alg, el), "Q(" + top + "; " + name(x) + ")")) return best;
    }
    for (std::size_t i = 0; i < from.size(); ++i)
      for (std::size_t j = i + 1; j < from.size(); ++j) {
        if (tried >= max_candidates) return best;
        const int x = from[i], y = from[j];
        const oracle::MatrixModule p = oracle::projective_module(alg, v);
        if (alg.element(x).target == alg.element(y).target) {
          oracle::Element el;
          el.terms = {{Rational(1), x}, {Rational(1), y}};
          if (consider(oracle::cyclic_quotient(alg, el), "Q(" + top + "; " + name(x) + " + " + name(y) + ")"))
            return best;
        }
        oracle::Element ex, ey;
        ex.terms.emplace_back(Rational(1), x);
        ey.terms.emplace_back(Rational(1), y);
        auto gens = oracle::element_generator(alg, ex);
        const auto gy = oracle::element_generator(alg, ey);
        for (int w = 0; w < alg.vertex_count(); ++w) gens[w] = gens[w].hcat(gy[w]);
        const auto sub = oracle::generate(alg, p, gens);
        if (consider(oracle::quotient(alg, p, sub), "P(" + top + ")/(" + name(x) + ", " + name(y) + ")")) return best;
      }
  }
  return best;
}

// ---------------------------------------------------------------------------------------------
// Tiled orders

/// L/πL for the irreducible lattice L = {x : v(x_k) >= mu_k}, which is an O-module iff
/// mu_i <= λ_ij + mu_j. One basis vector per vertex; b_ij acts by 1 iff λ_ij + mu_j = mu_i.
/// π is regular on L, so pdim_Λ(L/πL) = pdim_O(L).
inline oracle::MatrixModule lattice_reduction(const ExponentMatrix& m, const BasedAlgebra& alg,
                                              const std::vector<int>& mu) {
  oracle::MatrixModule out;
  out.dims.assign(m.n, 1);
  for (int a : alg.arrows()) {
    const auto& e = alg.element(a);
    QMatrix act(1, 1);
    if (m(e.target, e.source) + mu[e.source] == mu[e.target]) act(0, 0) = 1;
    out.actions.push_back(act);
  }
  return out;
}

/// Exponent vectors of all irreducible lattices, normalized by mu_1 = 0.
inline std::vector<std::vector<int>> lattice_exponents(const ExponentMatrix& m) {
  std::vector<std::vector<int>> out;
  std::vector<int> mu(m.n, 0);
  // mu_k ranges over [-λ_1k, λ_k1] once mu_1 = 0.
  auto rec = [&](auto& self, int k) -> void {
    if (k == m.n) {
      for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
          if (mu[i] > m(i, j) + mu[j]) return;
      out.push_back(mu);
      return;
    }
    for (int x = -m(0, k); x <= m(k, 0); ++x) {
      mu[k] = x;
      self(self, k + 1);
    }
  };
  rec(rec, 1);
  return out;
}

/// Largest finite pdim among the reductions of irreducible lattices.
inline FindimWitness lattice_search(const ExponentMatrix& m, const BasedAlgebra& alg, int cutoff,
                                    std::optional<int> stop_at = std::nullopt) {
  FindimWitness best{0, "P(1)"};
  for (const auto& mu : lattice_exponents(m)) {
    const auto p = oracle::pdim_upto(alg, lattice_reduction(m, alg, mu), cutoff);
    if (!p.value || *p.value <= best.pdim) continue;
    std::string what = "L/piL for the lattice with exponents (";
    for (std::size_t k = 0; k < mu.size(); ++k) what += (k ? "," : "") + std::to_string(mu[k]);
    best = {*p.value, what + ")"};
    if (stop_at && best.pdim >= *stop_at) break;
  }
  return best;
}

struct TiledFindim {
  TiledImport import;
  std::vector<Estimate> simple_pdims;
  /// ρ of each simple; empty where undetermined.
  std::vector<std::optional<int>> simple_rho;
  std::optional<int> max_simple_rho;
  std::optional<int> rho_left;
  std::optional<int> rho_right;
  int findim_lower = 0;
  std::string lower_witness;
  std::optional<int> findim_upper;
  bool gl_dim_infinite = false;
  bool certified = true;

  bool exact() const { return findim_upper && *findim_upper == findim_lower; }
  std::optional<int> findim_lambda() const { return exact() ? std::optional<int>(findim_lower) : std::nullopt; }
  /// fin dim O = 1 + fin dim Λ.
  int order_lower() const { return 1 + findim_lower; }
  std::optional<int> order_upper() const {
    return findim_upper ? std::optional<int>(1 + *findim_upper) : std::nullopt;
  }
};

inline std::optional<int> value_of(const oracle::RepetitionResult& r) { return r.value; }

inline TiledFindim tiled_findim(const ExponentMatrix& m, oracle::OracleOptions options = {}) {
  TiledFindim out;
  out.import = import_tiled_order(m);
  const BasedAlgebra& alg = out.import.algebra;
  const int n = alg.vertex_count();
  if (out.import.monomial()) {
    const AlgebraModel a(*out.import.presentation);
    SyzygyEngine e(a);
    for (int v = 0; v < n; ++v) {
      out.simple_pdims.push_back(Estimate::of(e.pdim(ModuleTerm::simple(v))));
      PathIdealSum s{ModuleTerm::simple(v)};
      out.simple_rho.push_back(repetition_index(e, s).value);
    }
    out.rho_left = repetition_index(e, all_simples(a)).value;
    out.rho_right = iz_bounds(a).rho_right;
    const FindimInterval iv = findim_interval(e);
    out.findim_lower = iv.lower;
    out.lower_witness = iv.witness ? io::print_module_expr(a.quiver(), *iv.witness) : "P(1)";
    out.findim_upper = std::min(iv.upper, *out.rho_right);
  } else {
    oracle::ClassGraph g(alg, options);
    for (int v = 0; v < n; ++v) {
      const auto s = oracle::simple_module(alg, v);
      out.simple_pdims.push_back(Estimate::of(oracle::pdim_upto(alg, s, options.cutoff)));
      out.simple_rho.push_back(oracle::repetition_from(g, oracle::non_projective_classes(g, s), options.cutoff).value);
    }
    std::vector<oracle::MatrixModule> simples;
    for (int v = 0; v < n; ++v) simples.push_back(oracle::simple_module(alg, v));
    out.rho_left =
        oracle::repetition_from(g, oracle::non_projective_classes(g, oracle::direct_sum(alg, simples)), options.cutoff)
            .value;
    out.certified = g.certified();
    const BasedAlgebra op = opposite(alg);
    std::vector<oracle::MatrixModule> right;
    for (int v = 0; v < n; ++v) right.push_back(oracle::simple_module(op, v));
    const auto rr = oracle::repetition_index_bounded(op, oracle::direct_sum(op, right), options.cutoff, options);
    out.rho_right = rr.value;
    out.certified = out.certified && rr.certified;
    out.findim_upper = out.rho_right;
    out.lower_witness = "P(1)";
  }
  auto raise = [&](int pdim, const std::string& what) {
    if (pdim > out.findim_lower) {
      out.findim_lower = pdim;
      out.lower_witness = what;
    }
  };
  auto done = [&] { return out.findim_upper && out.findim_lower >= *out.findim_upper; };
  if (!done()) {
    const FindimWitness w = lattice_search(m, alg, options.cutoff, out.findim_upper);
    raise(w.pdim, w.description);
  }
  if (!done()) {
    const FindimWitness w = findim_search(alg, options.cutoff, out.findim_upper);
    raise(w.pdim, w.description);
  }
  for (const auto& r : out.simple_rho)
    if (r) out.max_simple_rho = std::max(out.max_simple_rho.value_or(0), *r);
  for (const auto& r : out.simple_rho)
    if (!r) out.max_simple_rho.reset();
  for (const auto& p : out.simple_pdims)
    if (!p.is_finite()) out.gl_dim_infinite = true;
  return out;
}

} // namespace findim
