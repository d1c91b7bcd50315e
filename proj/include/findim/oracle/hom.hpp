#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "findim/errors.hpp"
#include "findim/oracle/module.hpp"

namespace findim::oracle {

/// A module homomorphism: one matrix per vertex (dims_N[v] x dims_M[v]).
using Hom = std::vector<QMatrix>;

inline constexpr std::size_t default_dimension_bound = 60;

/// Basis of Hom_Λ(M, N), from the linear system X_t A^M = A^N X_s over all arrows.
inline std::vector<Hom> hom_space(const BasedAlgebra& alg, const MatrixModule& m, const MatrixModule& n) {
  const int nv = alg.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(n.dims[v]) * m.dims[v];
  const std::size_t unknowns = offset[nv];
  if (unknowns == 0) return {};
  auto var = [&](int v, int r, int c) { return offset[v] + static_cast<std::size_t>(r) * m.dims[v] + c; };

  std::size_t equations = 0;
  for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
    const auto& e = alg.element(alg.arrows()[k]);
    equations += static_cast<std::size_t>(n.dims[e.target]) * m.dims[e.source];
  }
  QMatrix system(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < alg.arrows().size(); ++k) {
    const auto& e = alg.element(alg.arrows()[k]);
    const int s = e.source, t = e.target;
    const QMatrix& am = m.actions[k];
    const QMatrix& an = n.actions[k];
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c, ++row) {
        for (int j = 0; j < m.dims[t]; ++j)
          if (am(j, c) != 0) system(row, var(t, r, j)) += am(j, c);
        for (int i = 0; i < n.dims[s]; ++i)
          if (an(r, i) != 0) system(row, var(s, i, c)) -= an(r, i);
      }
  }
  const QMatrix basis = equations ? system.nullspace() : QMatrix::identity(unknowns);
  std::vector<Hom> out;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    Hom h(nv);
    for (int v = 0; v < nv; ++v) {
      h[v] = QMatrix(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c) h[v](r, c) = basis(var(v, r, c), b);
    }
    out.push_back(std::move(h));
  }
  return out;
}

inline Hom compose(const Hom& g, const Hom& f) {
  Hom h(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) h[v] = g[v] * f[v];
  return h;
}

inline Rational trace(const Hom& f) {
  Rational t = 0;
  for (const auto& b : f)
    if (b.rows()) t += b.trace();
  return t;
}

inline Hom identity_hom(const MatrixModule& m) {
  Hom h;
  for (int d : m.dims) h.push_back(QMatrix::identity(d));
  return h;
}

inline Hom combine(const std::vector<Hom>& basis, const std::vector<Rational>& coeffs) {
  Hom h = basis.front();
  for (auto& b : h) b = Rational(0) * b;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t v = 0; v < h.size(); ++v) h[v] = h[v] + coeffs[i] * basis[i][v];
  }
  return h;
}

inline std::size_t hom_rank(const Hom& f) {
  std::size_t r = 0;
  for (const auto& b : f) r += b.rank();
  return r;
}

/// Dimension of End(M)/rad End(M). In characteristic 0 the radical is the kernel of the trace
/// form (x, y) ↦ tr(xy) of the faithful representation on M.
inline std::size_t semisimple_rank(const std::vector<Hom>& endo) {
  const std::size_t h = endo.size();
  QMatrix gram(h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j) {
      Rational t = trace(compose(endo[i], endo[j]));
      gram(i, j) = t;
      gram(j, i) = t;
    }
  return gram.rank();
}

/// End(M) is local with residue field k; holds for every module with simple top.
inline bool split_local(const BasedAlgebra& alg, const MatrixModule& m) {
  if (m.is_zero()) return false;
  const auto endo = hom_space(alg, m, m);
  return endo.size() == 1 || semisimple_rank(endo) == 1;
}

struct IsoDecision {
  bool isomorphic = false;
  /// False only when the randomized invertibility test decided; its error is below 2^-40.
  bool certified = true;
};

inline IsoDecision isomorphism_test(const BasedAlgebra& alg, const MatrixModule& m, const MatrixModule& n,
                                    std::uint64_t seed = 0,
                                    std::size_t bound = default_dimension_bound) {
  if (m.dims != n.dims) return {false, true};
  if (m.dimension() > bound) throw DimensionBoundExceeded(m.dimension(), bound);
  if (m.is_zero()) return {true, true};
  if (layer_matrix(alg, m) != layer_matrix(alg, n)) return {false, true};
  const auto forward = hom_space(alg, m, n);
  if (forward.empty()) return {false, true};
  if (split_local(alg, m)) {
    // With End(M) = k ⊕ rad, g∘f is invertible iff its trace is nonzero.
    const auto backward = hom_space(alg, n, m);
    for (const auto& f : forward)
      for (const auto& g : backward)
        if (trace(compose(g, f)) != 0) return {true, true};
    return {false, true};
  }
  // Schwartz–Zippel on det(Σ c_i f_i): per trial the miss chance is <= dim / 2^20.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> coeff(1, 1L << 20);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Rational> c(forward.size());
    for (auto& x : c) x = coeff(rng);
    if (hom_rank(combine(forward, c)) == m.dimension()) return {true, true};
  }
  return {false, false};
}

inline bool are_isomorphic(const BasedAlgebra& alg, const MatrixModule& m, const MatrixModule& n,
                           std::uint64_t seed = 0, std::size_t bound = default_dimension_bound) {
  return isomorphism_test(alg, m, n, seed, bound).isomorphic;
}

struct Decomposition {
  std::vector<MatrixModule> summands;
  /// Every summand was shown to have a local endomorphism ring with residue field k.
  bool certified = true;
};

namespace detail {

inline Hom power(Hom f, std::size_t at_least) {
  std::size_t e = 1;
  while (e < at_least) {
    f = compose(f, f);
    e *= 2;
  }
  return f;
}

/// Fitting decomposition along a non-nilpotent, non-invertible endomorphism.
inline bool fitting_split(const BasedAlgebra& alg, const MatrixModule& m, const Hom& g,
                          MatrixModule& kernel_part, MatrixModule& image_part) {
  const std::size_t d = m.dimension();
  const Hom big = power(g, d);
  const std::size_t r = hom_rank(big);
  if (r == 0 || r == d) return false;
  GradedSubspace ker(alg.vertex_count()), img(alg.vertex_count());
  for (int v = 0; v < alg.vertex_count(); ++v) {
    ker[v] = m.dims[v] ? big[v].nullspace() : QMatrix(0, 0);
    img[v] = m.dims[v] ? big[v].column_basis() : QMatrix(0, 0);
  }
  kernel_part = restrict_to(alg, m, ker);
  image_part = restrict_to(alg, m, img);
  return true;
}

inline void decompose_into(const BasedAlgebra& alg, const MatrixModule& m, std::mt19937_64& rng,
                           Decomposition& out) {
  if (m.is_zero()) return;
  auto blocks = split_blocks(alg, m);
  if (blocks.size() > 1) {
    for (const auto& b : blocks) decompose_into(alg, b, rng, out);
    return;
  }
  const auto endo = hom_space(alg, m, m);
  if (endo.size() <= 1 || semisimple_rank(endo) == 1) {
    out.summands.push_back(m);
    return;
  }
  const Hom id = identity_hom(m);
  MatrixModule a, b;
  auto attempt = [&](const Hom& g) {
    if (!fitting_split(alg, m, g, a, b)) return false;
    decompose_into(alg, a, rng, out);
    decompose_into(alg, b, rng, out);
    return true;
  };
  auto shifted = [&](const Hom& g, int c) {
    Hom h = g;
    for (std::size_t v = 0; v < h.size(); ++v) h[v] = h[v] - Rational(c) * id[v];
    return h;
  };
  for (const auto& g : endo)
    for (int c : {0, 1, -1})
      if (attempt(shifted(g, c))) return;
  for (std::size_t i = 0; i < endo.size(); ++i)
    for (std::size_t j = 0; j < endo.size(); ++j)
      if (attempt(compose(endo[i], endo[j]))) return;
  std::uniform_int_distribution<int> small(-1, 1);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<Rational> c(endo.size());
    for (auto& x : c) x = small(rng);
    const Hom g = combine(endo, c);
    for (int s : {0, 1, -1, 2, -2})
      if (attempt(shifted(g, s))) return;
  }
  out.summands.push_back(m);
  out.certified = false;
}

} // namespace detail

/// Direct-sum decomposition into indecomposables, sorted by (dimension, layer matrix).
inline Decomposition decompose(const BasedAlgebra& alg, const MatrixModule& m, std::uint64_t seed = 0,
                               std::size_t bound = default_dimension_bound) {
  if (m.dimension() > bound) throw DimensionBoundExceeded(m.dimension(), bound);
  Decomposition out;
  std::mt19937_64 rng(seed);
  detail::decompose_into(alg, m, rng, out);
  std::vector<std::tuple<std::size_t, LayerMatrix, std::size_t>> keys;
  for (std::size_t i = 0; i < out.summands.size(); ++i)
    keys.emplace_back(out.summands[i].dimension(), layer_matrix(alg, out.summands[i]), i);
  std::stable_sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  std::vector<MatrixModule> sorted;
  for (const auto& k : keys) sorted.push_back(std::move(out.summands[std::get<2>(k)]));
  out.summands = std::move(sorted);
  return out;
}

} // namespace findim::oracle
