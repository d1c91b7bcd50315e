#pragma once

#include <string>
#include <vector>

#include "findim/invariants.hpp"
#include "findim/oracle/resolution.hpp"

namespace findim {

struct CheckOptions {
  int steps = 12;  // compare layer matrices of Ω^0 .. Ω^steps
  int cutoff = 12; // oracle pdim cutoff
};

struct CheckResult {
  std::size_t modules = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Engine against oracle on one monomial algebra: syzygy layer matrices and pdims of every
/// simple and every positive-length path ideal, the witness of s, and the two ρ inequalities.
inline CheckResult check_algebra(const AlgebraModel& a, const CheckOptions& opt = {}) {
  CheckResult r;
  const BasedAlgebra alg = to_based(a);
  SyzygyEngine engine(a);
  oracle::SyzygyStream stream(alg);
  auto fail = [&](const std::string& what) { r.mismatches.push_back(what); };

  std::vector<ModuleTerm> terms;
  for (int v = 0; v < a.vertex_count(); ++v) terms.push_back(ModuleTerm::simple(v));
  for (int q = a.vertex_count(); q < static_cast<int>(a.dimension()); ++q) terms.push_back(ModuleTerm::ideal(q));

  for (const auto& t : terms) {
    ++r.modules;
    const std::string name = term_to_string(a, t);
    oracle::MatrixModule m;
    if (t.kind == ModuleTerm::Kind::simple) {
      m = oracle::simple_module(alg, t.vertex);
    } else {
      oracle::Element el;
      el.terms.emplace_back(Rational(1), t.path);
      m = oracle::cyclic_ideal(alg, el);
    }
    PathIdealSum esum{t};
    auto osum = stream.decompose_blocks(m);
    std::optional<int> oracle_pdim;
    for (int k = 0; k <= opt.steps; ++k) {
      const LayerMatrix el = engine.layers(esum), ol = stream.layers(osum);
      if (el != ol) {
        fail(name + ": layer matrices of syzygy " + std::to_string(k) + " differ (engine " + el.str() +
             ", oracle " + ol.str() + ")");
        break;
      }
      if (k == opt.steps) break;
      esum = engine.syzygy(esum);
      osum = stream.step(osum);
      if (!oracle_pdim && osum.empty() && k <= opt.cutoff) oracle_pdim = k;
    }
    const NatInf ep = engine.pdim(t);
    if (ep.finite()) {
      if (ep.value() <= opt.cutoff && oracle_pdim != ep.value())
        fail(name + ": engine pdim " + ep.str() + ", oracle " +
             (oracle_pdim ? std::to_string(*oracle_pdim) : "exceeded"));
    } else if (oracle_pdim && opt.steps >= opt.cutoff) {
      fail(name + ": engine pdim infinity, oracle " + std::to_string(*oracle_pdim));
    }
  }

  const FindimInterval iv = findim_interval(engine);
  if (iv.witness) {
    const auto w = to_matrix_module(alg, *iv.witness, monomial_resolver(a));
    const auto p = oracle::pdim_upto(alg, w, std::max(opt.cutoff, iv.s + 1));
    if (p.value != iv.s + 1)
      fail("witness " + io::print_module_expr(a.quiver(), *iv.witness) + ": oracle pdim " +
           (p.value ? std::to_string(*p.value) : "exceeded") + ", expected s+1 = " + std::to_string(iv.s + 1));
  }
  const IzBounds iz = iz_bounds(a);
  if (!iz.dimJ_check)
    fail("rho_right " + std::to_string(iz.rho_right) + " exceeds dim J " + std::to_string(iz.dim_J));
  if (iv.s + 1 > iz.rho_right)
    fail("s + 1 = " + std::to_string(iv.s + 1) + " exceeds rho_right " + std::to_string(iz.rho_right));
  return r;
}

} // namespace findim
