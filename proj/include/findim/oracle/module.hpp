#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "findim/based_algebra.hpp"
#include "findim/errors.hpp"
#include "findim/layer_matrix.hpp"
#include "findim/linalg/rational.hpp"

namespace findim::oracle {

/// A finite dimensional left module given by a vector space at each vertex and one matrix per
/// arrow-level generator of the algebra (dims[target] x dims[source]).
struct MatrixModule {
  std::vector<int> dims;
  std::vector<QMatrix> actions;

  std::size_t dimension() const {
    return static_cast<std::size_t>(std::accumulate(dims.begin(), dims.end(), 0));
  }
  bool is_zero() const { return dimension() == 0; }

  friend bool operator==(const MatrixModule&, const MatrixModule&) = default;
};

/// Per-vertex subspace, each given by a matrix whose columns form a basis.
using GradedSubspace = std::vector<QMatrix>;

inline MatrixModule zero_module(const BasedAlgebra& alg) {
  MatrixModule m;
  m.dims.assign(alg.vertex_count(), 0);
  for (int a : alg.arrows()) {
    (void)a;
    m.actions.emplace_back(0, 0);
  }
  return m;
}

inline MatrixModule simple_module(const BasedAlgebra& alg, int vertex) {
  MatrixModule m;
  m.dims.assign(alg.vertex_count(), 0);
  m.dims.at(vertex) = 1;
  for (int a : alg.arrows()) m.actions.emplace_back(m.dims[alg.element(a).target], m.dims[alg.element(a).source]);
  return m;
}

/// Coordinates of the projective Λe_i: elements with source i, grouped by target vertex.
struct ProjectiveBasis {
  std::vector<std::vector<int>> at_vertex; // element indices at each vertex
  std::vector<int> position;               // element -> coordinate within its vertex, or -1
};

inline ProjectiveBasis projective_basis(const BasedAlgebra& alg, int vertex) {
  ProjectiveBasis pb;
  pb.at_vertex.assign(alg.vertex_count(), {});
  pb.position.assign(alg.dimension(), -1);
  for (int x : alg.elements_from(vertex)) {
    const int t = alg.element(x).target;
    pb.position[x] = static_cast<int>(pb.at_vertex[t].size());
    pb.at_vertex[t].push_back(x);
  }
  return pb;
}

inline MatrixModule projective_module(const BasedAlgebra& alg, int vertex) {
  const ProjectiveBasis pb = projective_basis(alg, vertex);
  MatrixModule m;
  for (const auto& v : pb.at_vertex) m.dims.push_back(static_cast<int>(v.size()));
  for (int a : alg.arrows()) {
    const int s = alg.element(a).source;
    const int t = alg.element(a).target;
    QMatrix act(m.dims[t], m.dims[s]);
    for (std::size_t c = 0; c < pb.at_vertex[s].size(); ++c) {
      const int y = alg.product(a, pb.at_vertex[s][c]);
      if (y != BasedAlgebra::zero) act(pb.position[y], c) = 1;
    }
    m.actions.push_back(std::move(act));
  }
  return m;
}

inline MatrixModule direct_sum(const BasedAlgebra& alg, const std::vector<MatrixModule>& parts) {
  MatrixModule m = zero_module(alg);
  for (const auto& p : parts)
    for (int v = 0; v < alg.vertex_count(); ++v) m.dims[v] += p.dims[v];
  const auto& arrows = alg.arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const int s = alg.element(arrows[k]).source;
    const int t = alg.element(arrows[k]).target;
    QMatrix act(m.dims[t], m.dims[s]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      const QMatrix& a = p.actions[k];
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) act(r0 + r, c0 + c) = a(r, c);
      r0 += p.dims[t];
      c0 += p.dims[s];
    }
    m.actions[k] = std::move(act);
  }
  return m;
}

/// Action of every basis element: matrix dims[target] x dims[source].
inline std::vector<QMatrix> element_actions(const BasedAlgebra& alg, const MatrixModule& m) {
  std::vector<QMatrix> act(alg.dimension());
  for (int v = 0; v < alg.vertex_count(); ++v) act[v] = QMatrix::identity(m.dims[v]);
  for (std::size_t x = alg.vertex_count(); x < alg.dimension(); ++x) {
    const auto& word = alg.words()[x];
    QMatrix acc = m.actions[word[0]];
    for (std::size_t k = 1; k < word.size(); ++k) acc = m.actions[word[k]] * acc;
    act[x] = std::move(acc);
  }
  return act;
}

/// Checks shapes and that the arrow matrices satisfy every relation of the algebra.
inline void validate(const BasedAlgebra& alg, const MatrixModule& m) {
  if (static_cast<int>(m.dims.size()) != alg.vertex_count() || m.actions.size() != alg.arrows().size())
    throw InvalidModule("module does not match the algebra");
  for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
    const auto& e = alg.element(alg.arrows()[k]);
    if (static_cast<int>(m.actions[k].rows()) != m.dims[e.target] ||
        static_cast<int>(m.actions[k].cols()) != m.dims[e.source])
      throw InvalidModule("action of '" + e.name + "' has the wrong shape");
  }
  const auto act = element_actions(alg, m);
  for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
    const int a = alg.arrows()[k];
    for (std::size_t x = 0; x < alg.dimension(); ++x) {
      if (alg.element(x).target != alg.element(a).source) continue;
      const int y = alg.product(a, static_cast<int>(x));
      const QMatrix lhs = m.actions[k] * act[x];
      const bool ok = y == BasedAlgebra::zero ? lhs.is_zero() : lhs == act[y];
      if (!ok) throw InvalidModule("relation through '" + alg.element(a).name + "' fails");
    }
  }
}

/// Smallest submodule containing the given per-vertex vectors (columns).
inline GradedSubspace generate(const BasedAlgebra& alg, const MatrixModule& m, GradedSubspace gens) {
  const int n = alg.vertex_count();
  GradedSubspace span(n);
  for (int v = 0; v < n; ++v) {
    if (gens[v].rows() == 0) gens[v] = QMatrix(m.dims[v], 0);
    span[v] = gens[v].column_basis();
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
      const auto& e = alg.element(alg.arrows()[k]);
      if (span[e.source].cols() == 0) continue;
      QMatrix image = m.actions[k] * span[e.source];
      QMatrix joined = span[e.target].hcat(image).column_basis();
      if (joined.cols() > span[e.target].cols()) {
        span[e.target] = std::move(joined);
        grew = true;
      }
    }
  }
  return span;
}

/// The module structure on a submodule with the given basis.
inline MatrixModule restrict_to(const BasedAlgebra& alg, const MatrixModule& m, const GradedSubspace& sub) {
  MatrixModule r;
  for (int v = 0; v < alg.vertex_count(); ++v) r.dims.push_back(static_cast<int>(sub[v].cols()));
  for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
    const auto& e = alg.element(alg.arrows()[k]);
    QMatrix coords;
    if (!linalg::solve(sub[e.target], m.actions[k] * sub[e.source], coords))
      throw InvalidModule("subspace is not a submodule");
    if (sub[e.target].cols() == 0) coords = QMatrix(0, sub[e.source].cols());
    r.actions.push_back(std::move(coords));
  }
  return r;
}

/// M / U for a submodule U; the quotient basis is the images of standard coordinates
/// completing a basis of U.
inline MatrixModule quotient(const BasedAlgebra& alg, const MatrixModule& m, const GradedSubspace& sub) {
  const int n = alg.vertex_count();
  std::vector<std::vector<std::size_t>> comp(n);
  std::vector<QMatrix> change(n); // inverse of [U_v | E_comp]
  MatrixModule q;
  for (int v = 0; v < n; ++v) {
    QMatrix u = sub[v].cols() ? sub[v] : QMatrix(m.dims[v], 0);
    comp[v] = u.complement_coordinates();
    QMatrix e(m.dims[v], comp[v].size());
    for (std::size_t j = 0; j < comp[v].size(); ++j) e(comp[v][j], j) = 1;
    change[v] = m.dims[v] ? linalg::inverse(u.hcat(e)) : QMatrix(0, 0);
    q.dims.push_back(static_cast<int>(comp[v].size()));
  }
  for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
    const auto& e = alg.element(alg.arrows()[k]);
    const int s = e.source, t = e.target;
    QMatrix act(q.dims[t], q.dims[s]);
    if (q.dims[t] && q.dims[s]) {
      const QMatrix image = change[t] * m.actions[k].select_columns(comp[s]);
      const std::size_t offset = sub[t].cols();
      for (int r = 0; r < q.dims[t]; ++r)
        for (int c = 0; c < q.dims[s]; ++c) act(r, c) = image(offset + r, c);
    }
    q.actions.push_back(std::move(act));
  }
  return q;
}

/// J M: the span of all arrow images.
inline GradedSubspace radical_subspace(const BasedAlgebra& alg, const MatrixModule& m) {
  GradedSubspace rad(alg.vertex_count());
  for (int v = 0; v < alg.vertex_count(); ++v) rad[v] = QMatrix(m.dims[v], 0);
  for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
    const auto& e = alg.element(alg.arrows()[k]);
    if (!m.dims[e.source] || !m.dims[e.target]) continue;
    rad[e.target] = rad[e.target].hcat(m.actions[k]);
  }
  for (auto& r : rad) r = r.column_basis();
  return rad;
}

inline MatrixModule radical(const BasedAlgebra& alg, const MatrixModule& m) {
  return restrict_to(alg, m, radical_subspace(alg, m));
}

inline MatrixModule top(const BasedAlgebra& alg, const MatrixModule& m) {
  return quotient(alg, m, radical_subspace(alg, m));
}

/// Projective cover P ↠ M together with the cover map (per vertex, dims_M x dims_P).
struct Cover {
  MatrixModule projective;
  std::vector<QMatrix> map;
  std::vector<int> generators; // vertex of each summand Λe_i of P, in order
};

inline Cover projective_cover(const BasedAlgebra& alg, const MatrixModule& m) {
  const int n = alg.vertex_count();
  const GradedSubspace rad = radical_subspace(alg, m);
  const auto act = element_actions(alg, m);
  Cover cover;
  std::vector<MatrixModule> parts;
  std::vector<std::pair<int, std::size_t>> lifts; // (vertex, coordinate of the lift)
  for (int v = 0; v < n; ++v)
    for (std::size_t c : rad[v].complement_coordinates()) {
      lifts.emplace_back(v, c);
      cover.generators.push_back(v);
      parts.push_back(projective_module(alg, v));
    }
  cover.projective = direct_sum(alg, parts);
  cover.map.resize(n);
  for (int v = 0; v < n; ++v) cover.map[v] = QMatrix(m.dims[v], cover.projective.dims[v]);
  std::vector<int> offset(n, 0);
  for (const auto& [g, coord] : lifts) {
    const ProjectiveBasis pb = projective_basis(alg, g);
    for (int v = 0; v < n; ++v) {
      for (std::size_t j = 0; j < pb.at_vertex[v].size(); ++j) {
        const QMatrix& a = act[pb.at_vertex[v][j]];
        for (int r = 0; r < m.dims[v]; ++r) cover.map[v](r, offset[v] + j) = a(r, coord);
      }
      offset[v] += static_cast<int>(pb.at_vertex[v].size());
    }
  }
  return cover;
}

/// Ω¹(M): the kernel of the projective cover.
inline MatrixModule syzygy_matrix(const BasedAlgebra& alg, const MatrixModule& m) {
  if (m.is_zero()) return zero_module(alg);
  const Cover cover = projective_cover(alg, m);
  GradedSubspace kernel(alg.vertex_count());
  for (int v = 0; v < alg.vertex_count(); ++v) {
    if (cover.projective.dims[v] == 0)
      kernel[v] = QMatrix(0, 0);
    else if (m.dims[v] == 0)
      kernel[v] = QMatrix::identity(cover.projective.dims[v]);
    else
      kernel[v] = cover.map[v].nullspace();
  }
  return restrict_to(alg, cover.projective, kernel);
}

inline LayerMatrix layer_matrix(const BasedAlgebra& alg, const MatrixModule& m) {
  const int n = alg.vertex_count();
  LayerMatrix lm(n);
  GradedSubspace cur(n);
  for (int v = 0; v < n; ++v) cur[v] = QMatrix::identity(m.dims[v]);
  while (true) {
    GradedSubspace next(n);
    for (int v = 0; v < n; ++v) next[v] = QMatrix(m.dims[v], 0);
    for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
      const auto& e = alg.element(alg.arrows()[k]);
      if (!cur[e.source].cols() || !m.dims[e.target]) continue;
      next[e.target] = next[e.target].hcat(m.actions[k] * cur[e.source]);
    }
    std::vector<std::uint64_t> row(n, 0);
    bool any = false;
    for (int v = 0; v < n; ++v) {
      next[v] = next[v].column_basis();
      row[v] = cur[v].cols() - next[v].cols();
      any = any || cur[v].cols() > 0;
    }
    if (!any) break;
    lm.rows.push_back(std::move(row));
    cur = std::move(next);
  }
  return lm;
}

inline std::vector<int> top_multiplicities(const BasedAlgebra& alg, const MatrixModule& m) {
  const GradedSubspace rad = radical_subspace(alg, m);
  std::vector<int> t(alg.vertex_count());
  for (int v = 0; v < alg.vertex_count(); ++v) t[v] = m.dims[v] - static_cast<int>(rad[v].cols());
  return t;
}

inline bool is_projective(const BasedAlgebra& alg, const MatrixModule& m) {
  const auto t = top_multiplicities(alg, m);
  std::size_t cover = 0;
  for (int v = 0; v < alg.vertex_count(); ++v) cover += t[v] * alg.elements_from(v).size();
  return cover == m.dimension();
}

/// A linear combination of parallel basis elements.
struct Element {
  std::vector<std::pair<Rational, int>> terms;
};

inline std::pair<int, int> endpoints(const BasedAlgebra& alg, const Element& x) {
  if (x.terms.empty()) throw NonParallelElement("empty element");
  const auto& first = alg.element(x.terms.front().second);
  for (const auto& [c, b] : x.terms)
    if (alg.element(b).source != first.source || alg.element(b).target != first.target)
      throw NonParallelElement("element combines non-parallel basis elements");
  return {first.source, first.target};
}

inline GradedSubspace element_generator(const BasedAlgebra& alg, const Element& x) {
  auto [s, t] = endpoints(alg, x);
  const ProjectiveBasis pb = projective_basis(alg, s);
  GradedSubspace g(alg.vertex_count());
  for (int v = 0; v < alg.vertex_count(); ++v) g[v] = QMatrix(pb.at_vertex[v].size(), 0);
  QMatrix vec(pb.at_vertex[t].size(), 1);
  for (const auto& [c, b] : x.terms) vec(pb.position[b], 0) += c;
  g[t] = vec;
  return g;
}

/// Λx as a submodule of Λe_source(x).
inline MatrixModule cyclic_ideal(const BasedAlgebra& alg, const Element& x) {
  auto [s, t] = endpoints(alg, x);
  const MatrixModule p = projective_module(alg, s);
  return restrict_to(alg, p, generate(alg, p, element_generator(alg, x)));
}

/// Λe_source(x) / Λx.
inline MatrixModule cyclic_quotient(const BasedAlgebra& alg, const Element& x) {
  auto [s, t] = endpoints(alg, x);
  const MatrixModule p = projective_module(alg, s);
  return quotient(alg, p, generate(alg, p, element_generator(alg, x)));
}

/// Splits along connected components of the coordinate graph of the action matrices. Each
/// part is a direct summand; parts need not be indecomposable.
inline std::vector<MatrixModule> split_blocks(const BasedAlgebra& alg, const MatrixModule& m) {
  const int n = alg.vertex_count();
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + m.dims[v];
  const int total = offset[n];
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
    const auto& e = alg.element(alg.arrows()[k]);
    const QMatrix& a = m.actions[k];
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (a(r, c) != 0) parent[find(offset[e.target] + static_cast<int>(r))] = find(offset[e.source] + static_cast<int>(c));
  }
  std::map<int, int> component;
  std::vector<int> comp_of(total);
  for (int x = 0; x < total; ++x) {
    auto [it, inserted] = component.emplace(find(x), static_cast<int>(component.size()));
    comp_of[x] = it->second;
  }
  if (component.size() <= 1) return {m};
  std::vector<MatrixModule> parts(component.size());
  std::vector<std::vector<std::vector<std::size_t>>> coords(component.size(), std::vector<std::vector<std::size_t>>(n));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < m.dims[v]; ++i) coords[comp_of[offset[v] + i]][v].push_back(i);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (int v = 0; v < n; ++v) parts[p].dims.push_back(static_cast<int>(coords[p][v].size()));
    for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
      const auto& e = alg.element(alg.arrows()[k]);
      const auto& rows = coords[p][e.target];
      const auto& cols = coords[p][e.source];
      QMatrix a(rows.size(), cols.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) a(r, c) = m.actions[k](rows[r], cols[c]);
      parts[p].actions.push_back(std::move(a));
    }
  }
  return parts;
}

/// Exact serialization, used to deduplicate identical blocks.
inline std::string module_key(const MatrixModule& m) {
  std::string key;
  for (int d : m.dims) key += std::to_string(d) + ',';
  for (const auto& a : m.actions) {
    key += '|';
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (a(r, c) == 0) {
          key += '.';
          continue;
        }
        key += a(r, c).get_str();
        key += ';';
      }
  }
  return key;
}

} // namespace findim::oracle
