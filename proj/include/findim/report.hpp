#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "findim/analysis.hpp"

namespace findim {

using Json = nlohmann::ordered_json;

/// {"finite": true, "value": k}, {"finite": false}, or {"undetermined": true, "cutoff": c}.
inline Json to_json(const Estimate& e) {
  switch (e.kind) {
  case Estimate::Kind::finite: return Json{{"finite", true}, {"value", e.value}};
  case Estimate::Kind::infinite: return Json{{"finite", false}};
  case Estimate::Kind::undetermined: return Json{{"undetermined", true}, {"cutoff", e.cutoff}};
  }
  return Json();
}

inline Json to_json(const NatInf& x) { return to_json(Estimate::of(x)); }

template <class T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

inline Json to_json(const LayerMatrix& lm) {
  Json rows = Json::array();
  for (const auto& r : lm.rows) rows.push_back(r);
  return Json{{"text", lm.str()}, {"rows", rows}};
}

inline Json to_json(const SyzygyTrace& t) {
  Json steps = Json::array();
  for (std::size_t k = 0; k < t.layers.size(); ++k) {
    Json s{{"k", k}, {"dimension", t.layers[k].total()}, {"layers", to_json(t.layers[k])}};
    if (k < t.terms.size()) s["summands"] = t.terms[k];
    steps.push_back(s);
  }
  return Json{{"module", t.module}, {"method", t.method}, {"steps", steps}};
}

inline Json to_json(const AnalysisReport& r) {
  Json j;
  j["tool"] = {{"name", "findim"}, {"version", r.version}};
  j["input"] = {{"kind", r.input_kind}, {"digest", "fnv1a64:" + r.digest}};
  j["algebra"] = {{"name", r.name.empty() ? Json(nullptr) : Json(r.name)},
                  {"vertices", r.vertices},
                  {"n", r.vertices.size()},
                  {"dimension", r.dimension},
                  {"dim_J", r.dim_J},
                  {"loewy_length", r.loewy_length},
                  {"monomial", r.monomial},
                  {"arrows", r.arrows},
                  {"relations", optional_json(r.relations)}};
  j["settings"] = {{"seed", r.seed}, {"cutoff", r.cutoff}, {"dim_bound", r.dim_bound}, {"side", r.side}};

  Json sides = Json::array();
  for (const auto& s : r.sides) {
    Json simples = Json::array();
    for (std::size_t v = 0; v < s.simple_pdims.size(); ++v)
      simples.push_back({{"vertex", r.vertices[v]}, {"pdim", to_json(s.simple_pdims[v])},
                         {"rho", optional_json(s.simple_rho[v])}});
    sides.push_back({{"side", s.side}, {"simples", simples}, {"rho_simples", optional_json(s.rho_simples)}});
  }
  j["sides"] = sides;
  j["gl_dim"] = to_json(r.gl_dim);

  if (r.interval) {
    const auto& iv = *r.interval;
    j["s"] = {{"value", iv.s}, {"empty_sup", iv.empty_sup}};
    j["findim_interval"] = {{"lower", iv.lower},
                            {"upper", iv.upper},
                            {"witness", optional_json(iv.witness)},
                            {"witness_pdim", iv.witness_pdim ? to_json(*iv.witness_pdim) : Json(nullptr)}};
  } else {
    j["s"] = nullptr;
    j["findim_interval"] = nullptr;
  }
  j["fin_dim"] = {{"lower", r.fin_dim.lower},
                  {"lower_witness", r.fin_dim.lower_witness},
                  {"upper", optional_json(r.fin_dim.upper)},
                  {"exact", r.fin_dim.exact()}};
  j["rho"] = {{"left", optional_json(r.rho_left)},
              {"right", optional_json(r.rho_right)},
              {"right_within_dim_J", optional_json(r.rho_right_within_dim_J)}};

  Json bounds = Json::array();
  for (const auto& b : r.bounds.entries)
    bounds.push_back({{"name", b.name},
                      {"hypothesis", b.hypothesis},
                      {"holds", b.holds},
                      {"value", optional_json(b.value)},
                      {"note", b.note.empty() ? Json(nullptr) : Json(b.note)}});
  j["bounds"] = bounds;

  if (r.tiled) {
    const auto& t = *r.tiled;
    j["tiled"] = {{"n", t.n},
                  {"identifications", t.identifications},
                  {"fin_dim_order", {{"lower", t.order_lower}, {"upper", optional_json(t.order_upper)}}},
                  {"max_simple_rho", optional_json(t.max_simple_rho)},
                  {"gl_dim_infinite", t.gl_dim_infinite}};
  } else {
    j["tiled"] = nullptr;
  }

  Json modules = Json::array();
  for (const auto& m : r.modules)
    modules.push_back({{"name", m.name}, {"expr", m.expr}, {"pdim", to_json(m.pdim)}, {"method", m.method}});
  j["modules"] = modules;
  Json traces = Json::array();
  for (const auto& t : r.traces) traces.push_back(to_json(t));
  j["traces"] = traces;
  j["undetermined"] = r.undetermined;
  j["certified"] = r.certified;
  if (r.seconds) j["timing"] = {{"seconds", *r.seconds}};
  return j;
}

inline std::string to_json_text(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

inline std::string opt_str(const std::optional<int>& x, const std::string& none = "undetermined") {
  return x ? std::to_string(*x) : none;
}

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "findim " << r.version << "  input " << r.input_kind << " fnv1a64:" << r.digest << '\n';
  os << "algebra";
  if (!r.name.empty()) os << ' ' << r.name;
  os << ": n = " << r.vertices.size() << ", dim = " << r.dimension << ", dim J = " << r.dim_J
     << ", Loewy length " << r.loewy_length << ", " << (r.monomial ? "monomial" : "not monomial") << '\n';
  os << "settings: seed " << r.seed << ", cutoff " << r.cutoff << ", dim bound " << r.dim_bound << ", side "
     << r.side << '\n';
  for (const auto& s : r.sides) {
    os << s.side << " simples:\n";
    for (std::size_t v = 0; v < s.simple_pdims.size(); ++v)
      os << "  S(" << r.vertices[v] << ")  pdim " << s.simple_pdims[v].str() << "  rho "
         << opt_str(s.simple_rho[v]) << '\n';
    os << "  rho of all simples: " << opt_str(s.rho_simples) << '\n';
  }
  os << "gl dim: " << r.gl_dim.str() << '\n';
  if (r.interval) {
    const auto& iv = *r.interval;
    os << "s = " << iv.s << (iv.empty_sup ? " (empty supremum)" : "") << "; fin dim and Fin dim lie in ["
       << iv.lower << ", " << iv.upper << "]\n";
    if (iv.witness)
      os << "  witness " << *iv.witness << ", oracle pdim " << iv.witness_pdim->str() << '\n';
  }
  os << "fin dim: ";
  if (r.fin_dim.exact()) os << r.fin_dim.lower;
  else os << "[" << r.fin_dim.lower << ", " << opt_str(r.fin_dim.upper, "?") << "]";
  os << "  (lower bound from " << r.fin_dim.lower_witness << ")\n";
  os << "rho left " << opt_str(r.rho_left) << ", rho right " << opt_str(r.rho_right);
  if (r.rho_right_within_dim_J) os << (*r.rho_right_within_dim_J ? " <= dim J" : " > dim J (violated)");
  os << '\n';
  os << "bounds:\n";
  for (const auto& b : r.bounds.entries) {
    os << "  " << b.name << ": ";
    if (!b.holds) os << "not applicable (" << b.hypothesis << " fails)";
    else os << opt_str(b.value);
    if (!b.note.empty()) os << "  [" << b.note << "]";
    os << '\n';
  }
  if (r.tiled) {
    const auto& t = *r.tiled;
    os << "tiled order: fin dim O ";
    if (t.order_upper && *t.order_upper == t.order_lower) os << "= " << t.order_lower;
    else os << "in [" << t.order_lower << ", " << opt_str(t.order_upper, "?") << "]";
    os << ", max simple rho " << opt_str(t.max_simple_rho) << ", gl dim infinite: "
       << (t.gl_dim_infinite ? "yes" : "no") << '\n';
  }
  for (const auto& m : r.modules)
    os << "module " << m.name << " = " << m.expr << ": pdim " << m.pdim.str() << " (" << m.method << ")\n";
  for (const auto& t : r.traces) {
    os << "syzygies of " << t.module << " (" << t.method << "):\n";
    for (std::size_t k = 0; k < t.layers.size(); ++k) {
      os << "  Omega^" << k << ": " << (t.layers[k].rows.empty() ? "0" : t.layers[k].str());
      if (k < t.terms.size() && !t.terms[k].empty()) os << "  = " << t.terms[k];
      os << '\n';
    }
  }
  for (const auto& u : r.undetermined) os << "undetermined: " << u << '\n';
  if (!r.certified) os << "note: some isomorphism or decomposition decisions were randomized\n";
  if (r.seconds) os << "time: " << *r.seconds << " s\n";
  return os.str();
}

} // namespace findim
