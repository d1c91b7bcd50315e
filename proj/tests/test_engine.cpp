#include <gtest/gtest.h>

#include "common.hpp"

using namespace findim;
using namespace testing_util;

namespace {

std::string syz(const AlgebraModel& a, const PathIdealSum& m) { return sum_to_string(a, syzygy(a, m)); }

PathIdealSum ideal(const AlgebraModel& a, const std::vector<std::string>& names) {
  return {ideal_term(a, path_of(a.quiver(), names))};
}

} // namespace

TEST(Engine, ParallelArrowsSyzygies) {
  const auto a = parallel_arrows();
  EXPECT_EQ(syz(a, ideal(a, {"epsilon"})), "I(mu)");
  EXPECT_TRUE(syzygy(a, ideal(a, {"mu"})).empty());
  EXPECT_EQ(syz(a, ideal(a, {"gamma"})), "I(delta) + I(epsilon) + I(gamma)");
  EXPECT_EQ(syz(a, ideal(a, {"alpha"})), "I(delta) + I(epsilon)");
  EXPECT_EQ(syz(a, ideal(a, {"beta"})), "I(epsilon) + I(gamma)");
  EXPECT_EQ(sum_to_string(a, syzygy_of_simple(a, 0)), "I(alpha) + I(beta)");
  EXPECT_EQ(sum_to_string(a, syzygy_of_simple(a, 3)), "0");
  EXPECT_EQ(sum_to_string(a, syzygy_of_ideal(a, path_of(a.quiver(), {"alpha", "gamma"}))),
            "I(delta) + I(epsilon) + I(gamma)");
}

TEST(Engine, ParallelArrowsPdims) {
  const auto a = parallel_arrows();
  SyzygyEngine e(a);
  EXPECT_EQ(e.pdim(ideal_term(a, path_of(a.quiver(), {"epsilon"}))), NatInf(1));
  EXPECT_EQ(e.pdim(ideal_term(a, path_of(a.quiver(), {"mu"}))), NatInf(0));
  for (const auto& names : std::vector<std::vector<std::string>>{
           {"alpha"}, {"beta"}, {"gamma"}, {"delta"}, {"alpha", "gamma"}, {"beta", "delta"}})
    EXPECT_FALSE(e.pdim(ideal_term(a, path_of(a.quiver(), names))).finite()) << names[0];
  EXPECT_FALSE(pdim_simple(a, 0).finite());
  EXPECT_FALSE(pdim_simple(a, 1).finite());
  EXPECT_EQ(pdim_simple(a, 2), NatInf(1));
  EXPECT_EQ(pdim_simple(a, 3), NatInf(0));
  EXPECT_FALSE(gl_dim(a).finite());
}

TEST(Engine, Multiplicities) {
  const auto a = parallel_arrows();
  PathIdealSum m = ideal(a, {"gamma"});
  m.add(ideal_term(a, path_of(a.quiver(), {"delta"})), 2);
  const PathIdealSum s = syzygy(a, m);
  EXPECT_EQ(s.count(), 9u);
  EXPECT_EQ(s.multiplicity(ideal_term(a, path_of(a.quiver(), {"epsilon"}))), 3u);
}

TEST(Engine, IsomorphicIdealsShareAClass) {
  const auto a = parallel_arrows();
  SyzygyEngine e(a);
  const int g = e.class_of(ideal_term(a, path_of(a.quiver(), {"gamma"})));
  const int d = e.class_of(ideal_term(a, path_of(a.quiver(), {"delta"})));
  const int ag = e.class_of(ideal_term(a, path_of(a.quiver(), {"alpha", "gamma"})));
  EXPECT_EQ(g, d);
  EXPECT_EQ(g, ag);
  EXPECT_NE(g, e.class_of(ideal_term(a, path_of(a.quiver(), {"epsilon"}))));
  EXPECT_EQ(e.node(g).dimension(), 1u);
}

TEST(Engine, LayerMatrices) {
  const auto a = parallel_arrows();
  SyzygyEngine e(a);
  EXPECT_EQ(e.layers(ideal_term(a, Path::trivial(0))).str(), "{S1} {S2x2} {S2x2}");
  EXPECT_EQ(e.layers(ModuleTerm::simple(1)).str(), "{S2}");
  EXPECT_EQ(e.layers(ideal(a, {"alpha"})).str(), "{S2} {S2}");
  EXPECT_EQ(e.layers(PathIdealSum{}).str(), "");
}

TEST(Engine, Graph) {
  const auto a = parallel_arrows();
  const SyzygyGraph g = syzygy_graph(a, {ModuleTerm::simple(0)});
  ASSERT_EQ(g.start.size(), 1u);
  EXPECT_FALSE(g.pdim[g.start[0].first].finite());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (g.projective[i]) {
      EXPECT_TRUE(g.edges[i].empty());
      EXPECT_EQ(g.pdim[i], NatInf(0));
    }
}

TEST(Engine, OneLoop) {
  const AlgebraModel a(one_loop());
  EXPECT_EQ(sum_to_string(a, syzygy_of_simple(a, 0)), "I(x)");
  EXPECT_EQ(syz(a, ideal(a, {"x"})), "I(x)");
  EXPECT_FALSE(pdim_simple(a, 0).finite());
}

TEST(EngineErrors, NotABasisPath) {
  const auto a = parallel_arrows();
  EXPECT_THROW(ideal_term(a, path_of(a.quiver(), {"alpha", "delta"})), NotABasisPath);
  EXPECT_THROW(syzygy_of_ideal(a, Path::trivial(0)), NotABasisPath);
  EXPECT_THROW(pdim_ideal(a, path_of(a.quiver(), {"epsilon", "mu"})), NotABasisPath);
}

TEST(NatInf, Arithmetic) {
  EXPECT_LT(NatInf(3), NatInf::infinity());
  EXPECT_EQ(NatInf::infinity() + 1, NatInf::infinity());
  EXPECT_EQ(NatInf(2) + 1, NatInf(3));
  EXPECT_EQ(max(NatInf(2), NatInf(5)), NatInf(5));
  EXPECT_EQ(NatInf::infinity().str(), "infinity");
  EXPECT_FALSE(NatInf::infinity().as_optional());
}
