#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "findim/algebra.hpp"
#include "findim/errors.hpp"
#include "findim/graph/scc.hpp"
#include "findim/layer_matrix.hpp"
#include "findim/natinf.hpp"

namespace findim {

/// One summand of a PathIdealSum: the simple S_i or the principal left ideal Λp.
/// An ideal on a trivial path is the indecomposable projective Λe_i.
struct ModuleTerm {
  enum class Kind { simple, ideal };

  Kind kind = Kind::simple;
  int vertex = 0; // simple: the vertex; ideal: unused
  int path = 0;   // ideal: basis index of p

  static ModuleTerm simple(int v) { return {Kind::simple, v, 0}; }
  static ModuleTerm ideal(int p) { return {Kind::ideal, 0, p}; }

  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
  friend auto operator<=>(const ModuleTerm&, const ModuleTerm&) = default;
};

inline std::string term_to_string(const AlgebraModel& a, const ModuleTerm& t) {
  if (t.kind == ModuleTerm::Kind::simple) return "S(" + a.quiver().vertex_name(t.vertex) + ")";
  if (a.path(t.path).is_trivial()) return "P(" + a.quiver().vertex_name(a.path(t.path).source) + ")";
  return "I(" + a.name_of(t.path) + ")";
}

/// Finite multiset of simples and principal path ideals; the empty sum is the zero module.
class PathIdealSum {
public:
  PathIdealSum() = default;
  PathIdealSum(std::initializer_list<ModuleTerm> terms) {
    for (const auto& t : terms) add(t);
  }

  void add(const ModuleTerm& t, std::uint64_t multiplicity = 1) {
    if (!multiplicity) return;
    auto& m = terms_[t];
    if (m > std::numeric_limits<std::uint64_t>::max() - multiplicity)
      throw std::overflow_error("summand multiplicity overflow");
    m += multiplicity;
  }
  void add(const PathIdealSum& other, std::uint64_t multiplicity = 1) {
    for (const auto& [t, m] : other.terms_) {
      if (multiplicity && m > std::numeric_limits<std::uint64_t>::max() / multiplicity)
        throw std::overflow_error("summand multiplicity overflow");
      add(t, m * multiplicity);
    }
  }

  bool empty() const { return terms_.empty(); }
  std::size_t distinct_terms() const { return terms_.size(); }
  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (const auto& [t, m] : terms_) c += m;
    return c;
  }
  std::uint64_t multiplicity(const ModuleTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? 0 : it->second;
  }
  const std::map<ModuleTerm, std::uint64_t>& terms() const { return terms_; }

  friend bool operator==(const PathIdealSum&, const PathIdealSum&) = default;

private:
  std::map<ModuleTerm, std::uint64_t> terms_;
};

inline std::string sum_to_string(const AlgebraModel& a, const PathIdealSum& m) {
  if (m.empty()) return "0";
  std::string s;
  for (const auto& [t, mult] : m.terms()) {
    if (!s.empty()) s += " + ";
    if (mult > 1) s += std::to_string(mult) + " ";
    s += term_to_string(a, t);
  }
  return s;
}

/// Isomorphism class of a cyclic monomial module Λe_t / L, keyed by the target vertex and the
/// set of surviving paths from t. For Λp this is t(p) and the future set of p.
struct IdealClass {
  int vertex = 0;
  std::vector<int> future; // sorted basis indices, always containing e_t
  ModuleTerm representative;

  std::size_t dimension() const { return future.size(); }
};

/// Closure of Ω¹ over ideal classes reachable from a start module.
struct SyzygyGraph {
  std::vector<IdealClass> nodes;
  /// Children of each node with multiplicities (classes of the summands of Ω¹).
  std::vector<std::vector<std::pair<int, std::uint64_t>>> edges;
  std::vector<bool> projective;
  std::vector<NatInf> pdim;
  /// Node of each start summand, with multiplicity.
  std::vector<std::pair<int, std::uint64_t>> start;
};

/// Field-independent syzygy calculus over one monomial algebra. Classes are discovered lazily
/// and cached; an engine is not thread-safe, but concurrent engines over the same algebra are.
class SyzygyEngine {
public:
  explicit SyzygyEngine(const AlgebraModel& algebra) : algebra_(&algebra) {}

  const AlgebraModel& algebra() const { return *algebra_; }

  /// Surviving paths of the cyclic module for a term.
  std::pair<int, std::vector<int>> future_of(const ModuleTerm& t) const {
    const AlgebraModel& a = *algebra_;
    if (t.kind == ModuleTerm::Kind::simple) {
      if (t.vertex < 0 || t.vertex >= a.vertex_count()) throw InvalidModule("unknown vertex in simple term");
      return {t.vertex, {a.trivial(t.vertex)}};
    }
    if (t.path < 0 || t.path >= static_cast<int>(a.dimension())) throw NotABasisPath("ideal on a non-basis path");
    const int v = a.path(t.path).target;
    std::vector<int> future;
    for (int x : a.paths_from(v))
      if (a.then(t.path, x)) future.push_back(x);
    return {v, std::move(future)};
  }

  int class_of(const ModuleTerm& t) {
    auto [v, future] = future_of(t);
    auto key = std::make_pair(v, future);
    auto it = lookup_.find(key);
    if (it != lookup_.end()) return it->second;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({v, std::move(future), t});
    lookup_.emplace(std::move(key), id);
    children_.emplace_back();
    expanded_.push_back(false);
    return id;
  }

  const IdealClass& node(int id) const { return nodes_.at(id); }
  std::size_t node_count() const { return nodes_.size(); }

  bool projective(int id) const {
    return nodes_[id].future.size() == algebra_->paths_from(nodes_[id].vertex).size();
  }

  /// Minimal generators of the kernel of Λe_t ↠ Λe_t/L: paths outside the surviving set whose
  /// immediate prefix survives.
  std::vector<int> kernel_generators(int vertex, const std::vector<int>& future) const {
    const AlgebraModel& a = *algebra_;
    std::vector<bool> alive(a.dimension(), false);
    for (int x : future) alive[x] = true;
    std::vector<int> out;
    std::size_t kernel_dim = 0;
    for (int x : a.paths_from(vertex)) {
      if (alive[x]) continue;
      ++kernel_dim;
      const Path& p = a.path(x);
      Path prefix{p.source, a.quiver().arrow(p.arrows.back()).source,
                  {p.arrows.begin(), p.arrows.end() - 1}};
      if (alive[*a.index_of(prefix)]) out.push_back(x);
    }
    std::size_t covered = 0;
    for (int q : out) covered += future_of(ModuleTerm::ideal(q)).second.size();
    if (covered != kernel_dim)
      throw std::logic_error("syzygy summands do not add up to the kernel dimension");
    return out;
  }

  /// Ω¹ of a single term, with the actual generating paths.
  PathIdealSum syzygy(const ModuleTerm& t) const {
    auto [v, future] = future_of(t);
    PathIdealSum out;
    for (int q : kernel_generators(v, future)) out.add(ModuleTerm::ideal(q));
    return out;
  }

  PathIdealSum syzygy(const PathIdealSum& m) const {
    PathIdealSum out;
    for (const auto& [t, mult] : m.terms()) out.add(syzygy(t), mult);
    return out;
  }

  const std::vector<std::pair<int, std::uint64_t>>& children(int id) {
    if (!expanded_[id]) {
      expanded_[id] = true;
      const int v = nodes_[id].vertex;
      const std::vector<int> future = nodes_[id].future;
      std::map<int, std::uint64_t> agg;
      for (int q : kernel_generators(v, future)) agg[class_of(ModuleTerm::ideal(q))] += 1;
      children_[id].assign(agg.begin(), agg.end());
    }
    return children_[id];
  }

  /// Projective dimension of a class; ∞ iff a cycle of Ω¹ is reachable.
  NatInf pdim(int id) {
    close_from(id);
    return pdim_[id];
  }

  NatInf pdim(const ModuleTerm& t) { return pdim(class_of(t)); }

  NatInf pdim(const PathIdealSum& m) {
    NatInf best = 0;
    for (const auto& [t, mult] : m.terms()) best = max(best, pdim(t));
    return best;
  }

  /// Builds the closure of Ω¹ from the given classes and fills in pdims for it.
  void close_from(int id) {
    if (id < static_cast<int>(pdim_.size()) && pdim_known_[id]) return;
    std::vector<int> order{id};
    std::vector<bool> seen(nodes_.size(), false);
    seen[id] = true;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (auto [c, m] : children(order[k])) {
        if (c >= static_cast<int>(seen.size())) seen.resize(nodes_.size(), false);
        if (!seen[c]) {
          seen[c] = true;
          order.push_back(c);
        }
      }
    }
    pdim_.resize(nodes_.size(), NatInf(0));
    pdim_known_.resize(nodes_.size(), false);
    // Local graph on the closure, then SCC condensation evaluated sinks first.
    std::map<int, int> local;
    for (std::size_t k = 0; k < order.size(); ++k) local[order[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> succ(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
      for (auto [c, m] : children_[order[k]]) succ[k].push_back(local[c]);
    const auto sccs = graph::strongly_connected_components(succ);
    std::vector<NatInf> value(order.size(), NatInf(0));
    for (const auto& comp : sccs) {
      if (graph::is_cyclic(comp, succ)) {
        for (int k : comp) value[k] = NatInf::infinity();
        continue;
      }
      const int k = comp.front();
      const int g = order[k];
      if (pdim_known_[g]) {
        value[k] = pdim_[g];
        continue;
      }
      if (projective(g)) {
        value[k] = 0;
        continue;
      }
      NatInf best = 0;
      for (int c : succ[k]) best = max(best, value[c]);
      value[k] = best + 1;
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      pdim_[order[k]] = value[k];
      pdim_known_[order[k]] = true;
    }
  }

  SyzygyGraph graph_from(const PathIdealSum& start) {
    SyzygyGraph g;
    std::map<int, int> local;
    std::vector<int> order;
    auto visit = [&](int id) {
      auto [it, inserted] = local.emplace(id, static_cast<int>(order.size()));
      if (inserted) order.push_back(id);
      return it->second;
    };
    for (const auto& [t, mult] : start.terms()) g.start.emplace_back(visit(class_of(t)), mult);
    for (std::size_t k = 0; k < order.size(); ++k)
      for (auto [c, m] : children(order[k])) visit(c);
    for (int id : order) {
      g.nodes.push_back(nodes_[id]);
      g.projective.push_back(projective(id));
      g.pdim.push_back(pdim(id));
      std::vector<std::pair<int, std::uint64_t>> e;
      for (auto [c, m] : children_[id]) e.emplace_back(local.at(c), m);
      g.edges.push_back(std::move(e));
    }
    return g;
  }

  /// Radical layers of a cyclic monomial module: a surviving path of length l sits in layer l.
  LayerMatrix layers(const ModuleTerm& t) const {
    auto [v, future] = future_of(t);
    LayerMatrix lm(algebra_->vertex_count());
    for (int x : future) {
      const Path& p = algebra_->path(x);
      if (lm.rows.size() <= p.length()) lm.rows.resize(p.length() + 1, std::vector<std::uint64_t>(lm.columns, 0));
      lm.rows[p.length()][p.target] += 1;
    }
    return lm;
  }

  LayerMatrix layers(const PathIdealSum& m) const {
    LayerMatrix lm(algebra_->vertex_count());
    for (const auto& [t, mult] : m.terms()) lm.add(layers(t), mult);
    return lm;
  }

private:
  const AlgebraModel* algebra_;
  std::vector<IdealClass> nodes_;
  std::map<std::pair<int, std::vector<int>>, int> lookup_;
  std::vector<std::vector<std::pair<int, std::uint64_t>>> children_;
  std::vector<bool> expanded_;
  std::vector<NatInf> pdim_;
  std::vector<bool> pdim_known_;
};

inline ModuleTerm ideal_term(const AlgebraModel& a, const Path& p) {
  auto idx = a.index_of(p);
  if (!idx) throw NotABasisPath("'" + path_to_string(a.quiver(), p) + "' is not a nonzero path");
  return ModuleTerm::ideal(*idx);
}

/// Kernel of Λe_t(p) ↠ Λp, x ↦ x·p, as the direct sum of Λq over minimal annihilating q.
inline PathIdealSum syzygy_of_ideal(const AlgebraModel& a, const Path& p) {
  const ModuleTerm t = ideal_term(a, p);
  if (p.is_trivial()) throw NotABasisPath("syzygy_of_ideal expects a path of positive length");
  return SyzygyEngine(a).syzygy(t);
}

/// J e_i as the direct sum of Λα over the arrows α leaving i.
inline PathIdealSum syzygy_of_simple(const AlgebraModel& a, int vertex) {
  return SyzygyEngine(a).syzygy(ModuleTerm::simple(vertex));
}

inline PathIdealSum syzygy(const AlgebraModel& a, const PathIdealSum& m) {
  return SyzygyEngine(a).syzygy(m);
}

inline SyzygyGraph syzygy_graph(const AlgebraModel& a, const PathIdealSum& start) {
  SyzygyEngine e(a);
  return e.graph_from(start);
}

inline NatInf pdim_ideal(const AlgebraModel& a, const Path& p) {
  const ModuleTerm t = ideal_term(a, p);
  return SyzygyEngine(a).pdim(t);
}

inline NatInf pdim_simple(const AlgebraModel& a, int vertex) {
  return SyzygyEngine(a).pdim(ModuleTerm::simple(vertex));
}

/// Supremum of the projective dimensions of the simples.
inline NatInf gl_dim(const AlgebraModel& a) {
  SyzygyEngine e(a);
  NatInf best = 0;
  for (int v = 0; v < a.vertex_count(); ++v) best = max(best, e.pdim(ModuleTerm::simple(v)));
  return best;
}

} // namespace findim
