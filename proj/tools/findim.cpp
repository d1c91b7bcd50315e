// findim: projective dimensions, syzygies and finitistic-dimension bounds for monomial
// algebras and reductions of tiled orders.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "findim/check.hpp"
#include "findim/corpus.hpp"
#include "findim/report.hpp"

namespace {

using namespace findim;

enum Exit { ok = 0, input_error = 1, infinite_dimensional = 2, undetermined = 3, mismatch = 4 };

struct Common {
  std::string file;
  bool json = false;
  int cutoff = 12;
  std::size_t dim_bound = oracle::default_dimension_bound;
  std::uint64_t seed = 0;
  std::string side = "both";
  bool strict = false;

  AnalysisOptions options() const {
    AnalysisOptions o;
    o.cutoff = cutoff;
    o.dim_bound = dim_bound;
    o.seed = seed;
    o.side = side == "left" ? Side::left : side == "right" ? Side::right : Side::both;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c, bool file_required = true) {
  auto* f = cmd->add_option("file", c.file, "algebra file (.qalg) or exponent matrix (.tord)");
  if (file_required) f->required();
  cmd->add_flag("--json", c.json, "print JSON");
  cmd->add_option("--cutoff", c.cutoff, "oracle syzygy cutoff")->capture_default_str()->check(CLI::Range(0, 1000));
  cmd->add_option("--dim-bound", c.dim_bound, "oracle decomposition dimension bound")->capture_default_str();
  cmd->add_option("--seed", c.seed, "seed for randomized steps")->envname("FINDIM_SEED")->capture_default_str();
  cmd->add_option("--side", c.side, "left, right or both")->check(CLI::IsMember({"left", "right", "both"}));
  cmd->add_flag("--strict", c.strict, "exit 3 when an answer is not certified");
}

int finish(const Common& c, bool settled) { return c.strict && !settled ? undetermined : ok; }

int cmd_analyze(const Common& c, bool timing, const std::vector<std::string>& traces, int steps) {
  std::string text;
  auto ws = Workspace::from_file(c.file, &text);
  AnalysisOptions o = c.options();
  o.timing = timing;
  o.traces = traces;
  o.trace_steps = steps;
  const AnalysisReport r = analyze(*ws, text, o);
  std::cout << (c.json ? to_json_text(r) : to_text(r));
  return finish(c, r.undetermined.empty() && r.certified);
}

int cmd_syzygy(const Common& c, const std::string& expr, int k) {
  auto ws = Workspace::from_file(c.file);
  const SyzygyTrace t = syzygy_trace(*ws, ws->parse(expr), k);
  if (c.json) {
    std::cout << to_json(t).dump(2) << '\n';
    return ok;
  }
  for (std::size_t i = 1; i < t.layers.size(); ++i) {
    std::cout << "Omega^" << i << ": " << (t.layers[i].rows.empty() ? "0" : t.layers[i].str());
    if (i < t.terms.size() && !t.terms[i].empty()) std::cout << "  = " << t.terms[i];
    std::cout << '\n';
  }
  return ok;
}

int cmd_pdim(const Common& c, const std::string& expr) {
  auto ws = Workspace::from_file(c.file);
  const ModulePdim p = module_pdim(*ws, ws->parse(expr), c.options());
  if (c.json)
    std::cout << Json{{"module", expr}, {"pdim", to_json(p.pdim)}, {"method", p.method}}.dump(2) << '\n';
  else
    std::cout << p.pdim.str() << '\n';
  return finish(c, p.pdim.determined());
}

int cmd_gldim(const Common& c) {
  auto ws = Workspace::from_file(c.file);
  Estimate gl;
  std::string method;
  if (const AlgebraModel* a = ws->model()) {
    gl = Estimate::of(gl_dim(*a));
    method = "engine";
  } else {
    method = "oracle";
    NatInf best = 0;
    bool all = true;
    for (int v = 0; v < ws->based().vertex_count(); ++v) {
      const auto p = oracle::pdim_upto(ws->based(), oracle::simple_module(ws->based(), v), c.cutoff);
      if (p.value) best = max(best, NatInf(*p.value));
      else all = false;
    }
    gl = all ? Estimate::of(best) : Estimate::undetermined(c.cutoff);
  }
  if (c.json)
    std::cout << Json{{"gl_dim", to_json(gl)}, {"method", method}}.dump(2) << '\n';
  else
    std::cout << gl.str() << '\n';
  return finish(c, gl.determined());
}

int cmd_repindex(const Common& c, const std::string& expr) {
  auto ws = Workspace::from_file(c.file);
  const io::ModuleExpr e = ws->parse(expr);
  std::optional<int> value;
  std::string method;
  bool certified = true;
  if (auto sum = ws->engine_sum(e)) {
    value = repetition_index(*ws->model(), *sum);
    method = "engine";
  } else {
    method = "oracle";
    try {
      const auto r = oracle::repetition_index_bounded(ws->based(), ws->matrix_module(e), c.cutoff,
                                                      c.options().oracle());
      value = r.value;
      certified = r.certified;
    } catch (const DimensionBoundExceeded& ex) {
      std::cerr << "note: " << ex.what() << '\n';
    }
  }
  if (c.json)
    std::cout << Json{{"module", expr}, {"rho", optional_json(value)}, {"method", method}, {"certified", certified}}
                     .dump(2)
              << '\n';
  else
    std::cout << opt_str(value, "undetermined (cutoff " + std::to_string(c.cutoff) + ")") << '\n';
  return finish(c, value.has_value() && certified);
}

int cmd_import_tiled(const Common& c) {
  std::string text;
  auto ws = Workspace::from_file(c.file, &text);
  if (!ws->tiled()) throw InputError("import-tiled expects a .tord exponent matrix");
  const TiledImport& imp = *ws->import();
  const BasedAlgebra& alg = imp.algebra;
  if (c.json) {
    Json arrows = Json::array();
    for (int a : alg.arrows())
      arrows.push_back({{"name", alg.element(a).name},
                        {"source", alg.vertex_names()[alg.element(a).source]},
                        {"target", alg.vertex_names()[alg.element(a).target]}});
    Json ids = Json::array();
    for (const auto& [p, q] : imp.identifications)
      ids.push_back({path_to_string(imp.quiver, p), path_to_string(imp.quiver, q)});
    Json relations = nullptr;
    if (imp.monomial()) {
      relations = Json::array();
      for (const auto& r : imp.presentation->relations) relations.push_back(path_to_string(imp.quiver, r));
    }
    std::cout << Json{{"n", alg.vertex_count()},
                      {"dimension", alg.dimension()},
                      {"arrows", arrows},
                      {"monomial", imp.monomial()},
                      {"relations", relations},
                      {"identifications", ids}}
                     .dump(2)
              << '\n';
    return ok;
  }
  std::cout << "# dimension " << alg.dimension() << ", " << alg.arrows().size() << " arrows, "
            << (imp.monomial() ? "monomial" : "not monomial") << '\n';
  if (imp.monomial()) {
    io::AlgebraDocument doc;
    doc.presentation = *imp.presentation;
    std::cout << io::print_algebra(doc);
  } else {
    for (int a : alg.arrows())
      std::cout << "arrow " << alg.element(a).name << ' ' << alg.vertex_names()[alg.element(a).source] << ' '
                << alg.vertex_names()[alg.element(a).target] << '\n';
    for (const auto& [p, q] : imp.identifications)
      std::cout << "# " << path_to_string(imp.quiver, p) << " = " << path_to_string(imp.quiver, q) << '\n';
  }
  return ok;
}

int cmd_oracle_check(const Common& c, int samples, int steps) {
  CheckOptions opt;
  opt.steps = steps;
  opt.cutoff = std::min(c.cutoff, steps);
  std::size_t modules = 0, bad = 0;
  auto report = [&](const std::string& label, const CheckResult& r) {
    modules += r.modules;
    for (const auto& m : r.mismatches) {
      ++bad;
      std::cout << label << ": " << m << '\n';
    }
  };
  if (!c.file.empty()) {
    auto ws = Workspace::from_file(c.file);
    if (!ws->model()) throw InputError("oracle-check needs a monomial algebra");
    report(c.file, check_algebra(*ws->model(), opt));
  }
  std::mt19937_64 rng(c.seed);
  for (int i = 0; i < samples; ++i) {
    const AlgebraModel a(corpus::random_monomial(rng));
    report("sample " + std::to_string(i), check_algebra(a, opt));
  }
  std::cout << "checked " << samples + (c.file.empty() ? 0 : 1) << " algebras, " << modules << " modules, " << bad
            << " mismatches\n";
  return bad ? mismatch : ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"findim: syzygies, projective dimensions and finitistic-dimension bounds"};
  app.set_version_flag("--version", std::string(findim::tool_version));
  app.require_subcommand(1);

  Common c;
  bool timing = false;
  std::vector<std::string> traces;
  int steps = 3, k = 2, samples = 100, check_steps = 12;
  std::string expr;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report");
  add_common(analyze_cmd, c);
  analyze_cmd->add_flag("--timing", timing, "include wall-clock time");
  analyze_cmd->add_option("--trace", traces, "module expression whose syzygies to list");
  analyze_cmd->add_option("--steps", steps, "syzygy steps per trace")->capture_default_str();

  auto* syzygy_cmd = app.add_subcommand("syzygy", "layer matrices of Omega^1..Omega^k");
  add_common(syzygy_cmd, c);
  syzygy_cmd->add_option("module", expr, "module expression")->required();
  syzygy_cmd->add_option("-k,--steps", k, "number of syzygies")->capture_default_str();

  auto* pdim_cmd = app.add_subcommand("pdim", "projective dimension of a module");
  add_common(pdim_cmd, c);
  pdim_cmd->add_option("module", expr, "module expression")->required();

  auto* gldim_cmd = app.add_subcommand("gldim", "global dimension");
  add_common(gldim_cmd, c);

  auto* rep_cmd = app.add_subcommand("repindex", "repetition index of a module");
  add_common(rep_cmd, c);
  rep_cmd->add_option("module", expr, "module expression")->required();

  auto* import_cmd = app.add_subcommand("import-tiled", "reduce a tiled order modulo its uniformizer");
  add_common(import_cmd, c);

  auto* check_cmd = app.add_subcommand("oracle-check", "engine against oracle on random monomial algebras");
  add_common(check_cmd, c, false);
  check_cmd->add_option("--samples", samples, "number of random algebras")->capture_default_str();
  check_cmd->add_option("--steps", check_steps, "syzygy steps compared")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : input_error;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(c, timing, traces, steps);
    if (*syzygy_cmd) return cmd_syzygy(c, expr, k);
    if (*pdim_cmd) return cmd_pdim(c, expr);
    if (*gldim_cmd) return cmd_gldim(c);
    if (*rep_cmd) return cmd_repindex(c, expr);
    if (*import_cmd) return cmd_import_tiled(c);
    if (*check_cmd) return cmd_oracle_check(c, samples, check_steps);
  } catch (const findim::InfiniteDimensional& e) {
    std::cerr << "error: " << e.what() << '\n';
    return infinite_dimensional;
  } catch (const findim::DimensionBoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return undetermined;
  } catch (const findim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  }
  return ok;
}
