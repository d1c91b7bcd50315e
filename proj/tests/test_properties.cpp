#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "findim/check.hpp"
#include "findim/corpus.hpp"
#include "findim/report.hpp"

using namespace findim;
using namespace testing_util;

TEST(Property, CorpusRespectsLimits) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto p = corpus::random_monomial(rng);
    EXPECT_LE(p.quiver.vertex_count(), 5);
    EXPECT_LE(p.quiver.arrow_count(), 8);
    EXPECT_LE(p.relations.size(), 12u);
    EXPECT_NO_THROW(p.validate());
    EXPECT_LE(AlgebraModel(p).dimension(), 40u);
  }
}

TEST(Property, EngineMatchesOracle) {
  std::mt19937_64 rng(20260101);
  std::size_t modules = 0;
  for (int i = 0; i < 100; ++i) {
    const AlgebraModel a(corpus::random_monomial(rng));
    const CheckResult r = check_algebra(a);
    modules += r.modules;
    for (const auto& m : r.mismatches) ADD_FAILURE() << "sample " << i << ": " << m;
  }
  EXPECT_GT(modules, 300u);
}

TEST(Property, SyzygyDimensionExactness) {
  // dim Ω(Λp) = dim Λe_t(p) - dim Λp
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const AlgebraModel a(corpus::random_monomial(rng));
    SyzygyEngine e(a);
    for (int q = 0; q < static_cast<int>(a.dimension()); ++q) {
      const ModuleTerm t = ModuleTerm::ideal(q);
      const auto whole = e.layers(ModuleTerm::ideal(a.trivial(a.path(q).target))).total();
      EXPECT_EQ(e.layers(e.syzygy(t)).total(), whole - e.layers(t).total());
    }
  }
}

TEST(Property, RadicalSquareZero) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const AlgebraModel a(corpus::random_radical_square_zero(rng));
    ASSERT_LE(a.loewy_length(), 2);
    const BasedAlgebra alg = to_based(a);
    for (int k = 0; k < 5; ++k) {
      const auto m = corpus::random_module(rng, alg);
      const LayerMatrix lm = oracle::layer_matrix(alg, oracle::syzygy_matrix(alg, m));
      EXPECT_LE(lm.layer_count(), 1u) << i << ": " << lm.str();
    }
    std::vector<Estimate> pd;
    for (int v = 0; v < a.vertex_count(); ++v) pd.push_back(Estimate::of(pdim_simple(a, v)));
    const auto mochizuki = classical_bounds(a, pd).get("mochizuki_j2").value;
    ASSERT_TRUE(mochizuki);
    EXPECT_GE(*mochizuki, compute_s(a) + 1);
  }
}

TEST(Property, DecomposeAndIsomorphism) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const AlgebraModel a(corpus::random_monomial(rng));
    const BasedAlgebra alg = to_based(a);
    std::vector<oracle::MatrixModule> ms;
    for (int k = 0; k < 4; ++k) ms.push_back(corpus::random_module(rng, alg));
    for (const auto& m : ms) {
      const auto dec = oracle::decompose(alg, m);
      LayerMatrix total(alg.vertex_count());
      for (const auto& s : dec.summands) total.add(oracle::layer_matrix(alg, s));
      EXPECT_EQ(total, oracle::layer_matrix(alg, m));
      EXPECT_TRUE(oracle::are_isomorphic(alg, m, m));
    }
    for (const auto& x : ms)
      for (const auto& y : ms)
        EXPECT_EQ(oracle::are_isomorphic(alg, x, y), oracle::are_isomorphic(alg, y, x));
  }
}

TEST(Property, ParserRoundTrip) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const io::AlgebraDocument doc = corpus::random_document(rng);
    const std::string text = io::print_algebra(doc);
    const io::AlgebraDocument back = io::parse_algebra(text);
    EXPECT_EQ(back, doc) << text;
    EXPECT_EQ(io::print_algebra(back), text);
  }
}

TEST(Property, JsonByteIdentical) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10; ++i) {
    const std::string text = io::print_algebra(corpus::random_document(rng));
    AnalysisOptions opt;
    opt.seed = 99;
    opt.cutoff = 6;
    auto w1 = Workspace::from_text(text, false);
    auto w2 = Workspace::from_text(text, false);
    EXPECT_EQ(to_json_text(analyze(*w1, text, opt)), to_json_text(analyze(*w2, text, opt)));
  }
}
