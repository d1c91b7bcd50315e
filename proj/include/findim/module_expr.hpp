#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "findim/algebra.hpp"
#include "findim/based_algebra.hpp"
#include "findim/engine/syzygy.hpp"
#include "findim/io/document.hpp"
#include "findim/oracle/module.hpp"

namespace findim {

/// Maps a quiver path to the basis element it evaluates to, or BasedAlgebra::zero.
using PathResolver = std::function<int(const Path&)>;

inline PathResolver monomial_resolver(const AlgebraModel& a) {
  return [&a](const Path& p) {
    auto idx = a.index_of(p);
    return idx ? *idx : BasedAlgebra::zero;
  };
}

/// For a tiled reduction: quiver arrow k is the arrow-level element arrows()[k].
inline PathResolver word_resolver(const BasedAlgebra& alg) {
  return [&alg](const Path& p) { return p.is_trivial() ? p.source : alg.evaluate(p.arrows); };
}

/// Replaces named summands by their definitions.
inline std::vector<io::SummandExpr> flatten(const io::ModuleExpr& e, const std::vector<io::ModuleDecl>& decls,
                                            int depth = 0) {
  if (depth > 64) throw InvalidModule("module definitions nest too deeply");
  std::vector<io::SummandExpr> out;
  for (const auto& s : e.summands) {
    if (s.kind != io::SummandExpr::Kind::named) {
      out.push_back(s);
      continue;
    }
    const io::ModuleDecl* d = nullptr;
    for (const auto& m : decls)
      if (m.name == s.name) d = &m;
    if (!d) throw InvalidModule("unknown module '" + s.name + "'");
    for (auto& t : flatten(d->expr, decls, depth + 1)) out.push_back(std::move(t));
  }
  return out;
}

/// Engine form of an expression built from S, P and I summands; empty if a quotient occurs.
inline std::optional<PathIdealSum> to_engine_sum(const AlgebraModel& a, const io::ModuleExpr& e,
                                                 const std::vector<io::ModuleDecl>& decls = {}) {
  PathIdealSum out;
  for (const auto& s : flatten(e, decls)) {
    switch (s.kind) {
    case io::SummandExpr::Kind::simple: out.add(ModuleTerm::simple(s.vertex)); break;
    case io::SummandExpr::Kind::projective: out.add(ModuleTerm::ideal(a.trivial(s.vertex))); break;
    case io::SummandExpr::Kind::ideal: out.add(ideal_term(a, s.path)); break;
    default: return std::nullopt;
    }
  }
  return out;
}

/// Element of Λ from (coefficient, path) terms; zero paths drop out and repeats are merged.
inline oracle::Element to_element(const std::vector<std::pair<Rational, Path>>& terms, const PathResolver& resolve) {
  std::map<int, Rational> acc;
  for (const auto& [c, p] : terms) {
    const int x = resolve(p);
    if (x != BasedAlgebra::zero) acc[x] += c;
  }
  oracle::Element el;
  for (const auto& [x, c] : acc)
    if (c != 0) el.terms.emplace_back(c, x);
  return el;
}

inline oracle::MatrixModule summand_module(const BasedAlgebra& alg, const io::SummandExpr& s,
                                           const PathResolver& resolve) {
  switch (s.kind) {
  case io::SummandExpr::Kind::simple: return oracle::simple_module(alg, s.vertex);
  case io::SummandExpr::Kind::projective: return oracle::projective_module(alg, s.vertex);
  case io::SummandExpr::Kind::ideal: {
    const int x = resolve(s.path);
    if (x == BasedAlgebra::zero) throw NotABasisPath("ideal generated by a zero path");
    oracle::Element el;
    el.terms.emplace_back(Rational(1), x);
    return oracle::cyclic_ideal(alg, el);
  }
  case io::SummandExpr::Kind::quotient: {
    const oracle::Element el = to_element(s.element, resolve);
    if (el.terms.empty()) return oracle::projective_module(alg, s.vertex);
    return oracle::cyclic_quotient(alg, el);
  }
  case io::SummandExpr::Kind::named: break;
  }
  throw InvalidModule("unresolved module name");
}

inline oracle::MatrixModule to_matrix_module(const BasedAlgebra& alg, const io::ModuleExpr& e,
                                             const PathResolver& resolve,
                                             const std::vector<io::ModuleDecl>& decls = {}) {
  std::vector<oracle::MatrixModule> parts;
  for (const auto& s : flatten(e, decls)) parts.push_back(summand_module(alg, s, resolve));
  return oracle::direct_sum(alg, parts);
}

inline io::ModuleExpr single(io::SummandExpr s) { return io::ModuleExpr{{std::move(s)}}; }

inline io::SummandExpr simple_expr(int v) {
  io::SummandExpr s;
  s.kind = io::SummandExpr::Kind::simple;
  s.vertex = v;
  return s;
}

inline io::SummandExpr quotient_expr(int v, std::vector<std::pair<Rational, Path>> element) {
  io::SummandExpr s;
  s.kind = io::SummandExpr::Kind::quotient;
  s.vertex = v;
  s.element = std::move(element);
  return s;
}

} // namespace findim
