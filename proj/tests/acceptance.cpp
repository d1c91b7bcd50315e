// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "common.hpp"
#include "findim/check.hpp"
#include "findim/corpus.hpp"
#include "findim/report.hpp"

using namespace findim;
using namespace testing_util;

namespace {

struct Checker {
  std::ostringstream why;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << (why.tellp() ? "; " : "") << what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Checker&)>& body) {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(s < limit_s, "took " + std::to_string(s) + " s, limit " + std::to_string(limit_s));
  if (!c.ok) ++failures;
  std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << s << " s)";
  if (!c.ok) std::cout << " -- " << c.why.str();
  std::cout << std::endl;
}

AnalysisReport analyze_file(const std::string& name, AnalysisOptions opt, std::string* json = nullptr) {
  std::string text;
  auto ws = Workspace::from_file(data_path(name), &text);
  AnalysisReport r = analyze(*ws, text, opt);
  if (json) *json = to_json_text(r);
  return r;
}

} // namespace

int main() {
  criterion(1, "one-loop algebra k[x]/(x^2)", 0.1, [](Checker& c) {
    const AlgebraModel a(one_loop());
    const BasedAlgebra alg = to_based(a);
    c.expect(oracle::pdim_upto(alg, oracle::simple_module(alg, 0), 20).exceeded(), "oracle not Exceeded at 20");
    SyzygyEngine e(a);
    const int s = e.class_of(ModuleTerm::simple(0));
    c.expect(!e.pdim(ModuleTerm::simple(0)).finite(), "engine pdim finite");
    const int x = e.class_of(ModuleTerm::ideal(a.index_of(path_of(a.quiver(), {"x"})).value()));
    bool self_loop = false;
    for (const auto& [child, m] : e.children(x)) self_loop |= child == x;
    c.expect(self_loop, "no self-loop on the class of the ideal (x)");
    c.expect(!e.children(s).empty(), "simple has no syzygy");
    const FindimInterval iv = findim_interval(a);
    c.expect(iv.lower == 0 && iv.upper == 1, "interval not [0,1]");
    c.expect(iz_bounds(a).rho_right == 0, "rho_right != 0");
    const AnalysisReport r = analyze_file("one_loop.qalg", {});
    c.expect(r.fin_dim.upper == 0 && r.fin_dim.exact(), "reported Fin dim bound not 0");
  });

  criterion(2, "two parallel arrows example", 1.0, [](Checker& c) {
    const AlgebraModel a = parallel_arrows();
    const Quiver& q = a.quiver();
    SyzygyEngine e(a);
    for (int p = a.vertex_count(); p < static_cast<int>(a.dimension()); ++p) {
      const NatInf d = e.pdim(ModuleTerm::ideal(p));
      const std::string name = a.name_of(p);
      if (name == "epsilon") c.expect(d == NatInf(1), "pdim I(epsilon) = " + d.str());
      else if (name == "mu") c.expect(d == NatInf(0), "pdim I(mu) = " + d.str());
      else c.expect(!d.finite(), "pdim I(" + name + ") finite");
    }
    const FindimInterval iv = findim_interval(e);
    c.expect(iv.s == 1, "s != 1");
    c.expect(iv.lower == 2 && iv.upper == 3, "interval not [2,3]");
    const auto doc = parallel_doc();
    const BasedAlgebra alg = to_based(a);
    const auto w = to_matrix_module(alg, io::parse_module_expr("Q(1; alpha + beta)", q), monomial_resolver(a));
    c.expect(w.dimension() == 2, "dim Q(1; alpha + beta) != 2");
    c.expect(oracle::pdim_upto(alg, w, 5).value == 3, "oracle pdim Q(1; alpha + beta) != 3");
    const AnalysisReport r = analyze_file("parallel_arrows.qalg", {});
    c.expect(r.interval && r.interval->witness_pdim == Estimate::finite(2), "witness not confirmed");
    c.expect(r.fin_dim.exact() && r.fin_dim.lower == 3, "fin dim not 3");
  });

  criterion(3, "5x5 tiled order", 5.0, [](Checker& c) {
    const ExponentMatrix m = tiled5();
    const TiledImport imp = import_tiled_order(m);
    const BasedAlgebra& alg = imp.algebra;
    c.expect(alg.dimension() == 25 && alg.vertex_count() == 5, "not 25-dimensional on 5 vertices");
    const auto layers = oracle::syzygy_layers(alg, oracle::simple_module(alg, 0), 3);
    c.expect(layers.size() == 4, "syzygy_layers size");
    if (layers.size() == 4) {
      c.expect(layers[1].str() == "{S2,S4} {S3} {S5}", "Omega^1 layers " + layers[1].str());
      c.expect(layers[2].str() == "{S1,S3} {S2,S4,S5} {S1}", "Omega^2 layers " + layers[2].str());
      c.expect(layers[3].str() == "{S2,S4} {S3} {S5}", "Omega^3 layers " + layers[3].str());
    }
    const auto o1 = oracle::syzygy_matrix(alg, oracle::simple_module(alg, 0));
    const auto o3 = oracle::syzygy_matrix(alg, oracle::syzygy_matrix(alg, o1));
    c.expect(oracle::are_isomorphic(alg, o1, o3), "Omega^1 not isomorphic to Omega^3");
    oracle::OracleOptions o;
    o.cutoff = 8;
    c.expect(oracle::repetition_index_bounded(alg, oracle::simple_module(alg, 0), 8, o).value == 1, "rho(S1) != 1");
    std::vector<oracle::MatrixModule> rest;
    for (int v = 1; v < 5; ++v) rest.push_back(oracle::simple_module(alg, v));
    c.expect(oracle::repetition_index_bounded(alg, oracle::direct_sum(alg, rest), 8, o).value == 2,
             "rho(S2+...+S5) != 2");
    AnalysisOptions opt;
    opt.cutoff = 8;
    const AnalysisReport r = analyze_file("tiled5.tord", opt);
    c.expect(r.fin_dim.exact() && r.fin_dim.lower == 2, "fin dim Lambda not 2");
    c.expect(r.tiled && r.tiled->order_lower == 3 && r.tiled->order_upper == 3, "fin dim O not 3");
  });

  criterion(4, "J^3 = 0 with a loop at every vertex, n = 4 and 21", 10.0, [](Checker& c) {
    for (int n : {4, 21}) {
      const AlgebraModel a(looped_cycle(n));
      const std::string tag = "n=" + std::to_string(n) + ": ";
      c.expect(a.loewy_length() <= 3, tag + "J^3 != 0");
      const BasedAlgebra alg = to_based(a);
      std::vector<Estimate> pd;
      for (int v = 0; v < n; ++v) {
        pd.push_back(Estimate::of(pdim_simple(a, v)));
        c.expect(pd.back().is_infinite(), tag + "engine pdim S" + std::to_string(v + 1) + " finite");
        c.expect(oracle::pdim_upto(alg, oracle::simple_module(alg, v), 12).exceeded(),
                 tag + "oracle pdim S" + std::to_string(v + 1) + " within 12");
      }
      const auto b = classical_bounds(a, pd).get("gzh_2n_j3");
      c.expect(b.holds && b.value == 2 * n, tag + "gzh_2n_j3 != 2n");
      c.expect(findim_interval(a).s + 1 <= 2 * n, tag + "s + 1 > 2n");
    }
  });

  criterion(5, "engine against oracle on 100 random monomial algebras", 120.0, [](Checker& c) {
    std::mt19937_64 rng(20260101);
    std::size_t bad = 0;
    for (int i = 0; i < 100; ++i) {
      const AlgebraModel a(corpus::random_monomial(rng));
      const CheckResult r = check_algebra(a);
      bad += r.mismatches.size();
      for (const auto& m : r.mismatches) c.expect(false, "sample " + std::to_string(i) + ": " + m);
    }
    c.expect(bad == 0, std::to_string(bad) + " mismatches");
  });

  criterion(6, "J^2 = 0: semisimple first syzygies, Mochizuki >= s+1", 30.0, [](Checker& c) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
      const AlgebraModel a(corpus::random_radical_square_zero(rng));
      const BasedAlgebra alg = to_based(a);
      for (int k = 0; k < 5; ++k) {
        const auto m = corpus::random_module(rng, alg);
        c.expect(oracle::layer_matrix(alg, oracle::syzygy_matrix(alg, m)).layer_count() <= 1,
                 "sample " + std::to_string(i) + ": first syzygy not semisimple");
      }
      std::vector<Estimate> pd;
      for (int v = 0; v < a.vertex_count(); ++v) pd.push_back(Estimate::of(pdim_simple(a, v)));
      const auto mo = classical_bounds(a, pd).get("mochizuki_j2").value;
      c.expect(mo && *mo >= compute_s(a) + 1, "sample " + std::to_string(i) + ": Mochizuki < s + 1");
    }
  });

  criterion(7, "parser round trip and byte-identical JSON", 60.0, [](Checker& c) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
      const io::AlgebraDocument doc = corpus::random_document(rng);
      const std::string text = io::print_algebra(doc);
      c.expect(io::parse_algebra(text) == doc, "document " + std::to_string(i) + " changed");
    }
    AnalysisOptions opt;
    opt.seed = 42;
    opt.cutoff = 8;
    opt.traces = {"S(1)"};
    for (const char* f : {"parallel_arrows.qalg", "one_loop.qalg", "tiled5.tord"}) {
      std::string a, b;
      analyze_file(f, opt, &a);
      analyze_file(f, opt, &b);
      c.expect(a == b, std::string(f) + ": JSON differs between runs");
    }
  });

  return failures ? 1 : 0;
}
