#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "findim/invariants.hpp"
#include "findim/io/document.hpp"
#include "findim/module_expr.hpp"

namespace findim {

inline constexpr const char* tool_version = "0.1.0";

/// 64-bit FNV-1a of the input bytes, as 16 hex digits.
inline std::string input_digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// An input file resolved into the models the engine and the oracle need. Module expressions
/// are parsed against its quiver: `.qalg` arrows, or b<i>_<j> for a tiled reduction.
class Workspace {
public:
  explicit Workspace(io::AlgebraDocument doc)
      : kind_("qalg"), doc_(std::move(doc)), model_(std::make_unique<AlgebraModel>(doc_.presentation)),
        based_(to_based(*model_)), quiver_(model_->quiver()) {}

  explicit Workspace(ExponentMatrix m)
      : kind_("tord"), matrix_(std::move(m)), import_(import_tiled_order(*matrix_)),
        based_(import_->algebra), quiver_(import_->quiver) {
    if (import_->monomial()) model_ = std::make_unique<AlgebraModel>(*import_->presentation);
  }

  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  static std::unique_ptr<Workspace> from_text(const std::string& text, bool tiled) {
    if (tiled) return std::make_unique<Workspace>(io::parse_exponent_matrix(text));
    return std::make_unique<Workspace>(io::parse_algebra(text));
  }

  /// `.tord` files are exponent matrices; anything else is read as `.qalg`.
  static std::unique_ptr<Workspace> from_file(const std::string& path, std::string* text_out = nullptr) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    const bool tiled = path.size() >= 5 && path.compare(path.size() - 5, 5, ".tord") == 0;
    if (text_out) *text_out = ss.str();
    return from_text(ss.str(), tiled);
  }

  const std::string& kind() const { return kind_; }
  bool tiled() const { return matrix_.has_value(); }
  const std::string& name() const { return doc_.name; }
  const Quiver& quiver() const { return quiver_; }
  const BasedAlgebra& based() const { return based_; }
  /// Monomial model, or null for a non-monomial tiled reduction.
  const AlgebraModel* model() const { return model_.get(); }
  const std::optional<ExponentMatrix>& matrix() const { return matrix_; }
  const std::optional<TiledImport>& import() const { return import_; }
  const std::vector<io::ModuleDecl>& modules() const { return doc_.modules; }

  PathResolver resolver() const {
    if (tiled()) return word_resolver(based_);
    return monomial_resolver(*model_);
  }

  io::ModuleExpr parse(const std::string& expr) const { return io::parse_module_expr(expr, quiver_, doc_.modules); }
  std::string print(const io::ModuleExpr& e) const { return io::print_module_expr(quiver_, e); }

  std::optional<PathIdealSum> engine_sum(const io::ModuleExpr& e) const {
    if (!model_) return std::nullopt;
    return to_engine_sum(*model_, e, doc_.modules);
  }

  oracle::MatrixModule matrix_module(const io::ModuleExpr& e) const {
    return to_matrix_module(based_, e, resolver(), doc_.modules);
  }

private:
  std::string kind_;
  io::AlgebraDocument doc_;
  std::optional<ExponentMatrix> matrix_;
  std::optional<TiledImport> import_;
  std::unique_ptr<AlgebraModel> model_;
  BasedAlgebra based_;
  Quiver quiver_;
};

enum class Side { left, right, both };

inline std::string side_name(Side s) {
  switch (s) {
  case Side::left: return "left";
  case Side::right: return "right";
  case Side::both: return "both";
  }
  return "both";
}

struct AnalysisOptions {
  int cutoff = 12;
  std::size_t dim_bound = oracle::default_dimension_bound;
  std::uint64_t seed = 0;
  Side side = Side::both;
  bool timing = false;
  std::vector<std::string> traces;
  int trace_steps = 3;
  std::size_t search_budget = 400;

  oracle::OracleOptions oracle() const { return {dim_bound, cutoff, seed}; }
};

/// Exact pdim from the engine, when the expression lies in its reach: S, P, I summands and
/// Q(v; c p) with a single path, where Ω(Λe_v/Λp) = Λp.
inline std::optional<NatInf> engine_pdim(const Workspace& ws, const io::ModuleExpr& e) {
  const AlgebraModel* a = ws.model();
  if (!a) return std::nullopt;
  SyzygyEngine engine(*a);
  NatInf best = 0;
  for (const auto& s : flatten(e, ws.modules())) {
    switch (s.kind) {
    case io::SummandExpr::Kind::simple: best = max(best, engine.pdim(ModuleTerm::simple(s.vertex))); break;
    case io::SummandExpr::Kind::projective: break;
    case io::SummandExpr::Kind::ideal: best = max(best, engine.pdim(ideal_term(*a, s.path))); break;
    case io::SummandExpr::Kind::quotient: {
      std::map<int, Rational> acc;
      for (const auto& [c, p] : s.element)
        if (auto x = a->index_of(p)) acc[*x] += c;
      std::vector<int> live;
      for (const auto& [x, c] : acc)
        if (c != 0) live.push_back(x);
      if (live.empty()) break;                         // quotient by zero: projective
      if (live.size() > 1) return std::nullopt;        // needs the oracle
      if (a->path(live.front()).is_trivial()) break;   // zero module
      best = max(best, engine.pdim(ModuleTerm::ideal(live.front())) + 1);
      break;
    }
    case io::SummandExpr::Kind::named: return std::nullopt;
    }
  }
  return best;
}

struct ModulePdim {
  Estimate pdim;
  std::string method; // "engine" or "oracle"
};

inline ModulePdim module_pdim(const Workspace& ws, const io::ModuleExpr& e, const AnalysisOptions& opt) {
  if (auto p = engine_pdim(ws, e)) return {Estimate::of(*p), "engine"};
  const auto m = ws.matrix_module(e);
  return {Estimate::of(oracle::pdim_upto(ws.based(), m, opt.cutoff)), "oracle"};
}

struct SyzygyTrace {
  std::string module;
  std::string method;
  /// Layer matrices of Ω^0 .. Ω^steps.
  std::vector<LayerMatrix> layers;
  /// Engine only: Ω^k as a sum of principal ideals.
  std::vector<std::string> terms;
};

inline SyzygyTrace syzygy_trace(const Workspace& ws, const io::ModuleExpr& e, int steps) {
  SyzygyTrace t;
  t.module = ws.print(e);
  if (auto sum = ws.engine_sum(e)) {
    t.method = "engine";
    SyzygyEngine engine(*ws.model());
    PathIdealSum cur = *sum;
    for (int k = 0; k <= steps; ++k) {
      t.layers.push_back(engine.layers(cur));
      t.terms.push_back(sum_to_string(*ws.model(), cur));
      if (k < steps) cur = engine.syzygy(cur);
    }
    return t;
  }
  t.method = "oracle";
  t.layers = oracle::syzygy_layers(ws.based(), ws.matrix_module(e), steps);
  return t;
}

struct SideSummary {
  std::string side;
  std::vector<Estimate> simple_pdims;
  std::vector<std::optional<int>> simple_rho;
  std::optional<int> rho_simples; // ρ of the direct sum of all simples
};

struct IntervalSection {
  int s = -1;
  int lower = 0;
  int upper = 1;
  bool empty_sup = true;
  std::optional<std::string> witness;
  std::optional<Estimate> witness_pdim; // oracle confirmation
};

struct FindimSection {
  int lower = 0;
  std::string lower_witness;
  std::optional<int> upper;

  bool exact() const { return upper && *upper == lower; }
};

struct TiledSection {
  int n = 0;
  int order_lower = 1;
  std::optional<int> order_upper;
  bool gl_dim_infinite = false;
  std::optional<int> max_simple_rho;
  int identifications = 0;
};

struct ModuleSummary {
  std::string name;
  std::string expr;
  Estimate pdim;
  std::string method;
};

struct AnalysisReport {
  std::string version = tool_version;
  std::string input_kind;
  std::string digest;
  std::string name;
  std::vector<std::string> vertices;
  std::size_t dimension = 0;
  std::size_t dim_J = 0;
  int loewy_length = 0;
  bool monomial = false;
  int arrows = 0;
  std::optional<int> relations;

  std::uint64_t seed = 0;
  int cutoff = 0;
  std::size_t dim_bound = 0;
  std::string side;

  std::vector<SideSummary> sides;
  Estimate gl_dim;
  std::optional<IntervalSection> interval;
  FindimSection fin_dim;
  std::optional<int> rho_left;
  std::optional<int> rho_right;
  std::optional<bool> rho_right_within_dim_J;
  BoundsReport bounds;
  std::optional<TiledSection> tiled;
  std::vector<ModuleSummary> modules;
  std::vector<SyzygyTrace> traces;
  std::vector<std::string> undetermined;
  bool certified = true;
  std::optional<double> seconds;
};

namespace detail {

inline SideSummary engine_side(const AlgebraModel& a, const std::string& side) {
  SyzygyEngine e(a);
  SideSummary s{side, {}, {}, std::nullopt};
  for (int v = 0; v < a.vertex_count(); ++v) {
    s.simple_pdims.push_back(Estimate::of(e.pdim(ModuleTerm::simple(v))));
    s.simple_rho.push_back(repetition_index(e, PathIdealSum{ModuleTerm::simple(v)}).value);
  }
  s.rho_simples = repetition_index(e, all_simples(a)).value;
  return s;
}

inline SideSummary oracle_side(const BasedAlgebra& alg, const std::string& side, const AnalysisOptions& opt,
                               AnalysisReport& r) {
  SideSummary s{side, {}, {}, std::nullopt};
  oracle::ClassGraph g(alg, opt.oracle());
  std::vector<oracle::MatrixModule> simples;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    simples.push_back(oracle::simple_module(alg, v));
    s.simple_pdims.push_back(Estimate::of(oracle::pdim_upto(alg, simples.back(), opt.cutoff)));
    std::optional<int> rho;
    try {
      rho = oracle::repetition_from(g, oracle::non_projective_classes(g, simples.back()), opt.cutoff).value;
    } catch (const DimensionBoundExceeded&) {
      r.undetermined.push_back(side + " rho(S(" + alg.vertex_names()[v] + ")): dimension bound " +
                               std::to_string(opt.dim_bound) + " exceeded");
    }
    s.simple_rho.push_back(rho);
  }
  try {
    s.rho_simples =
        oracle::repetition_from(g, oracle::non_projective_classes(g, oracle::direct_sum(alg, simples)), opt.cutoff)
            .value;
  } catch (const DimensionBoundExceeded&) {
    r.undetermined.push_back(side + " rho of the simples: dimension bound exceeded");
  }
  r.certified = r.certified && g.certified();
  return s;
}

} // namespace detail

inline AnalysisReport analyze(const Workspace& ws, const std::string& text, const AnalysisOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  const BasedAlgebra& alg = ws.based();
  r.input_kind = ws.kind();
  r.digest = input_digest(text);
  r.name = ws.name();
  r.vertices = alg.vertex_names();
  r.dimension = alg.dimension();
  r.dim_J = alg.radical_dimension();
  r.loewy_length = alg.loewy_length();
  r.monomial = ws.model() != nullptr;
  r.arrows = static_cast<int>(alg.arrows().size());
  if (ws.model()) r.relations = static_cast<int>(ws.model()->presentation().relations.size());
  r.seed = opt.seed;
  r.cutoff = opt.cutoff;
  r.dim_bound = opt.dim_bound;
  r.side = side_name(opt.side);
  const int n = alg.vertex_count();
  const bool want_left = opt.side != Side::right;
  const bool want_right = opt.side != Side::left;

  SideSummary left, right;
  if (const AlgebraModel* a = ws.model()) {
    left = detail::engine_side(*a, "left");
    right = detail::engine_side(opposite(*a), "right");
    SyzygyEngine e(*a);
    const FindimInterval iv = findim_interval(e);
    IntervalSection sec;
    sec.s = iv.s;
    sec.lower = iv.lower;
    sec.upper = iv.upper;
    sec.empty_sup = iv.empty_sup;
    if (iv.witness) {
      sec.witness = ws.print(*iv.witness);
      const auto w = ws.matrix_module(*iv.witness);
      sec.witness_pdim = Estimate::of(oracle::pdim_upto(alg, w, std::max(opt.cutoff, iv.s + 1)));
    }
    r.interval = sec;
    r.fin_dim.lower = iv.lower;
    r.fin_dim.lower_witness = sec.witness.value_or("P(" + r.vertices.front() + ")");
    r.fin_dim.upper = std::min(iv.upper, *right.rho_simples);
  } else {
    left = detail::oracle_side(alg, "left", opt, r);
    right = detail::oracle_side(opposite(alg), "right", opt, r);
    r.fin_dim.lower = 0;
    r.fin_dim.lower_witness = "P(" + r.vertices.front() + ")";
    r.fin_dim.upper = right.rho_simples;
  }
  r.rho_left = left.rho_simples;
  r.rho_right = right.rho_simples;
  if (r.rho_right) r.rho_right_within_dim_J = static_cast<std::size_t>(*r.rho_right) <= r.dim_J;
  if (want_left) r.sides.push_back(left);
  if (want_right) r.sides.push_back(right);
  for (const auto& side : {left, right})
    for (int v = 0; v < n; ++v) {
      if (!side.simple_pdims[v].determined())
        r.undetermined.push_back(side.side + " pdim S(" + r.vertices[v] + ") exceeds cutoff " +
                                 std::to_string(opt.cutoff));
      if (!side.simple_rho[v] && ws.model() == nullptr)
        r.undetermined.push_back(side.side + " rho(S(" + r.vertices[v] + ")) not periodic within cutoff " +
                                 std::to_string(opt.cutoff));
    }
  if (!r.rho_right) r.undetermined.push_back("rho_right not periodic within cutoff " + std::to_string(opt.cutoff));

  // gl dim from the left simples.
  bool all_known = true;
  NatInf gl = 0;
  for (const auto& p : left.simple_pdims) {
    if (!p.determined()) all_known = false;
    else gl = max(gl, p.is_finite() ? NatInf(p.value) : NatInf::infinity());
  }
  r.gl_dim = all_known || !gl.finite() ? Estimate::of(gl) : Estimate::undetermined(opt.cutoff);

  // Raise the lower end of fin dim with explicit modules.
  auto raise = [&](const FindimWitness& w) {
    if (w.pdim > r.fin_dim.lower) {
      r.fin_dim.lower = w.pdim;
      r.fin_dim.lower_witness = w.description;
    }
  };
  auto open = [&] { return !r.fin_dim.upper || r.fin_dim.lower < *r.fin_dim.upper; };
  if (ws.matrix() && open()) raise(lattice_search(*ws.matrix(), alg, opt.cutoff, r.fin_dim.upper));
  if (open()) raise(findim_search(alg, opt.cutoff, r.fin_dim.upper, opt.search_budget));
  if (r.fin_dim.upper && *r.fin_dim.upper < r.fin_dim.lower) {
    r.undetermined.push_back("witness pdim " + std::to_string(r.fin_dim.lower) + " exceeds the upper bound " +
                             std::to_string(*r.fin_dim.upper));
    r.certified = false;
  }

  BoundsInput in;
  in.n = n;
  in.loewy_length = r.loewy_length;
  in.dim_J = r.dim_J;
  in.simple_pdims = left.simple_pdims;
  in.rho_right = r.rho_right;
  in.tiled = ws.tiled();
  if (r.fin_dim.exact()) in.findim_lambda = r.fin_dim.lower;
  r.bounds = classical_bounds(in);

  if (ws.tiled()) {
    TiledSection t;
    t.n = n;
    t.order_lower = 1 + r.fin_dim.lower;
    if (r.fin_dim.upper) t.order_upper = 1 + *r.fin_dim.upper;
    for (const auto& p : left.simple_pdims)
      if (!p.is_finite()) t.gl_dim_infinite = true;
    for (const auto& x : left.simple_rho) {
      if (!x) {
        t.max_simple_rho.reset();
        break;
      }
      t.max_simple_rho = std::max(t.max_simple_rho.value_or(0), *x);
    }
    t.identifications = static_cast<int>(ws.import()->identifications.size());
    r.tiled = t;
  }

  for (const auto& m : ws.modules()) {
    const ModulePdim p = module_pdim(ws, m.expr, opt);
    r.modules.push_back({m.name, ws.print(m.expr), p.pdim, p.method});
    if (!p.pdim.determined())
      r.undetermined.push_back("pdim " + m.name + " exceeds cutoff " + std::to_string(opt.cutoff));
  }
  for (const auto& t : opt.traces) r.traces.push_back(syzygy_trace(ws, ws.parse(t), opt.trace_steps));

  if (opt.timing)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace findim
