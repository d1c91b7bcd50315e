#include <gtest/gtest.h>

#include "common.hpp"

using namespace findim;
using namespace testing_util;

namespace {

struct Tiled5 : ::testing::Test {
  static const TiledImport& imp() {
    static const TiledImport value = import_tiled_order(tiled5());
    return value;
  }
  const BasedAlgebra& alg = imp().algebra;
};

} // namespace

TEST_F(Tiled5, ImportShape) {
  EXPECT_EQ(alg.vertex_count(), 5);
  EXPECT_EQ(alg.dimension(), 25u);
  EXPECT_FALSE(imp().monomial());
  EXPECT_FALSE(imp().identifications.empty());
  EXPECT_EQ(alg.element(alg.find("b2_1").value()).source, 0);
  EXPECT_EQ(alg.element(alg.find("b2_1").value()).target, 1);
}

TEST_F(Tiled5, SyzygyLayersOfS1) {
  const auto layers = oracle::syzygy_layers(alg, oracle::simple_module(alg, 0), 3);
  ASSERT_EQ(layers.size(), 4u);
  EXPECT_EQ(layers[0].str(), "{S1}");
  EXPECT_EQ(layers[1].str(), "{S2,S4} {S3} {S5}");
  EXPECT_EQ(layers[2].str(), "{S1,S3} {S2,S4,S5} {S1}");
  EXPECT_EQ(layers[3].str(), "{S2,S4} {S3} {S5}");
}

TEST_F(Tiled5, OmegaOneIsIndecomposableAndRecurs) {
  const auto s1 = oracle::simple_module(alg, 0);
  const auto o1 = oracle::syzygy_matrix(alg, s1);
  const auto o3 = oracle::syzygy_matrix(alg, oracle::syzygy_matrix(alg, o1));
  const auto dec = oracle::decompose(alg, o1);
  ASSERT_EQ(dec.summands.size(), 1u);
  EXPECT_EQ(dec.summands[0].dimension(), 4u);
  EXPECT_TRUE(oracle::are_isomorphic(alg, o1, o3));
}

TEST_F(Tiled5, RepetitionIndices) {
  oracle::OracleOptions o;
  o.cutoff = 8;
  EXPECT_EQ(oracle::repetition_index_bounded(alg, oracle::simple_module(alg, 0), 8, o).value, 1);
  std::vector<oracle::MatrixModule> rest;
  for (int v = 1; v < 5; ++v) rest.push_back(oracle::simple_module(alg, v));
  EXPECT_EQ(oracle::repetition_index_bounded(alg, oracle::direct_sum(alg, rest), 8, o).value, 2);
}

TEST_F(Tiled5, FinitisticDimensions) {
  oracle::OracleOptions o;
  o.cutoff = 8;
  const TiledFindim t = tiled_findim(tiled5(), o);
  ASSERT_EQ(t.simple_rho.size(), 5u);
  EXPECT_EQ(t.simple_rho[0], 1);
  int rest = 0;
  for (int v = 1; v < 5; ++v) rest = std::max(rest, t.simple_rho[v].value());
  EXPECT_EQ(rest, 2);
  EXPECT_EQ(t.findim_lower, 2);
  EXPECT_EQ(t.findim_upper, 2);
  EXPECT_TRUE(t.exact());
  EXPECT_EQ(t.order_lower(), 3);
  EXPECT_EQ(t.order_upper(), 3);
  EXPECT_TRUE(t.gl_dim_infinite);
}

TEST_F(Tiled5, LatticeReductions) {
  const auto m = tiled5();
  const auto exps = lattice_exponents(m);
  ASSERT_FALSE(exps.empty());
  for (const auto& mu : exps) {
    EXPECT_EQ(mu[0], 0);
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) EXPECT_LE(mu[i], m(i, j) + mu[j]);
    EXPECT_NO_THROW(oracle::validate(alg, lattice_reduction(m, alg, mu)));
  }
  // The column lattice with exponents λ_i1 reduces to the projective P(1).
  std::vector<int> column;
  for (int i = 0; i < m.n; ++i) column.push_back(m(i, 0));
  const auto p = lattice_reduction(m, alg, column);
  EXPECT_EQ(oracle::layer_matrix(alg, p), oracle::layer_matrix(alg, oracle::projective_module(alg, 0)));
  EXPECT_TRUE(oracle::is_projective(alg, p));
}

TEST(Tiled, SmallMonomialCase) {
  const ExponentMatrix m = io::parse_exponent_matrix(read_data("tiled2.tord"));
  const TiledImport imp = import_tiled_order(m);
  ASSERT_TRUE(imp.monomial());
  const AlgebraModel a(*imp.presentation);
  EXPECT_EQ(a.dimension(), 4u);
  EXPECT_EQ(imp.algebra.dimension(), 4u);
  const TiledFindim t = tiled_findim(m);
  EXPECT_EQ(t.findim_lower, 0);
  EXPECT_TRUE(t.gl_dim_infinite);
}

TEST(Tiled, HereditaryTriangular) {
  // λ_ij = 1 above the diagonal: the upper triangular order, hereditary.
  ExponentMatrix m{3, {{0, 1, 1}, {0, 0, 1}, {0, 0, 0}}};
  const TiledImport imp = import_tiled_order(m);
  EXPECT_EQ(imp.algebra.dimension(), 9u);
  const TiledFindim t = tiled_findim(m);
  EXPECT_FALSE(t.simple_pdims.empty());
  EXPECT_EQ(t.order_lower(), 1 + t.findim_lower);
}

TEST(TiledErrors, InvalidMatrix) {
  EXPECT_THROW(import_tiled_order(ExponentMatrix{2, {{0, 1}, {1, 1}}}), InvalidExponentMatrix);
  EXPECT_THROW(import_tiled_order(ExponentMatrix{0, {}}), InvalidExponentMatrix);
  EXPECT_THROW(import_tiled_order(ExponentMatrix{2, {{0, 1}}}), InvalidExponentMatrix);
}
