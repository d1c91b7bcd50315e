#include <gtest/gtest.h>

#include "common.hpp"

using namespace findim;
using namespace testing_util;

TEST(Algebra, ParallelArrowsBasis) {
  const auto a = parallel_arrows();
  EXPECT_EQ(a.vertex_count(), 4);
  EXPECT_EQ(a.dimension(), 12u);
  EXPECT_EQ(dim_radical(a), 8u);
  EXPECT_EQ(a.loewy_length(), 3);
  EXPECT_TRUE(a.index_of(path_of(a.quiver(), {"alpha", "gamma"})));
  EXPECT_TRUE(a.index_of(path_of(a.quiver(), {"beta", "delta"})));
  EXPECT_FALSE(a.index_of(path_of(a.quiver(), {"alpha", "delta"})));
  EXPECT_FALSE(a.index_of(path_of(a.quiver(), {"epsilon", "mu"})));
  // Λe1 = {e1, alpha, beta, alpha*gamma, beta*delta}
  EXPECT_EQ(a.paths_from(0).size(), 5u);
  EXPECT_EQ(a.paths_from(3).size(), 1u);
}

TEST(Algebra, Multiply) {
  const auto a = parallel_arrows();
  const Quiver& q = a.quiver();
  // multiply(p, q) is "p then q".
  auto ag = multiply(a, path_of(q, {"alpha"}), path_of(q, {"gamma"}));
  ASSERT_TRUE(ag);
  EXPECT_EQ(*ag, path_of(q, {"alpha", "gamma"}));
  EXPECT_FALSE(multiply(a, path_of(q, {"alpha"}), path_of(q, {"delta"})));
  EXPECT_FALSE(multiply(a, path_of(q, {"gamma"}), path_of(q, {"alpha"}))); // not composable
  EXPECT_EQ(*multiply(a, path_of(q, {"alpha"}), Path::trivial(1)), path_of(q, {"alpha"}));
  EXPECT_THROW(multiply(a, path_of(q, {"epsilon", "mu"}), Path::trivial(3)), NotABasisPath);
}

TEST(Algebra, OppositeIsAnInvolution) {
  const auto doc = parallel_doc();
  const auto op = opposite(doc.presentation);
  EXPECT_EQ(opposite(op), doc.presentation);
  const AlgebraModel a(doc.presentation), b(op);
  EXPECT_EQ(a.dimension(), b.dimension());
  EXPECT_EQ(a.loewy_length(), b.loewy_length());
  EXPECT_EQ(b.paths_from(0).size(), 1u); // vertex 1 is a source in the original
  EXPECT_EQ(b.paths_from(3).size(), 2u); // e4, mu
}

TEST(Algebra, SemisimpleAndHereditary) {
  MonomialPresentation p;
  p.quiver.add_vertex("1");
  p.quiver.add_vertex("2");
  const AlgebraModel ss(p);
  EXPECT_EQ(ss.dimension(), 2u);
  EXPECT_EQ(ss.loewy_length(), 1);
  EXPECT_EQ(gl_dim(ss), NatInf(0));

  const auto doc = io::parse_algebra(read_data("hereditary_a3.qalg"));
  const AlgebraModel a3(doc.presentation);
  EXPECT_EQ(a3.dimension(), 6u);
  EXPECT_EQ(gl_dim(a3), NatInf(1));
}

TEST(AlgebraErrors, InfiniteDimensional) {
  MonomialPresentation p;
  p.quiver.add_vertex("1");
  p.quiver.add_arrow("x", 0, 0);
  EXPECT_THROW(AlgebraModel{p}, InfiniteDimensional);
  // One relation on a single rotation of an oriented cycle is enough for finiteness.
  MonomialPresentation c;
  c.quiver.add_vertex("1");
  c.quiver.add_vertex("2");
  c.quiver.add_arrow("a", 0, 1);
  c.quiver.add_arrow("b", 1, 0);
  c.relations = {path_of(c.quiver, {"a", "b", "a", "b"})};
  EXPECT_NO_THROW(AlgebraModel{c});
  EXPECT_EQ(AlgebraModel(c).dimension(), 2u + 4u + 3u);
}

TEST(AlgebraErrors, CapTurnsIntoDimensionBound) {
  MonomialPresentation p;
  p.quiver.add_vertex("1");
  p.quiver.add_arrow("x", 0, 0);
  p.relations = {make_path(p.quiver, std::vector<int>(50, 0)).value()};
  EXPECT_EQ(AlgebraModel(p).dimension(), 50u);
  EXPECT_THROW(AlgebraModel(p, 10), DimensionBoundExceeded);
}

TEST(AlgebraErrors, InvalidPresentation) {
  MonomialPresentation p;
  p.quiver.add_vertex("1");
  p.quiver.add_arrow("x", 0, 0);
  p.relations = {Path::of_arrow(p.quiver, 0)};
  EXPECT_THROW(AlgebraModel{p}, InvalidPresentation);
  p.relations = {path_of(p.quiver, {"x", "x"}), path_of(p.quiver, {"x", "x", "x"})};
  EXPECT_THROW(AlgebraModel{p}, InvalidPresentation);
  p.relations = reduce_relations(p.relations);
  EXPECT_EQ(p.relations.size(), 1u);
  EXPECT_NO_THROW(AlgebraModel{p});
}

TEST(Quiver, PathsAndNames) {
  const auto a = parallel_arrows();
  const Quiver& q = a.quiver();
  EXPECT_FALSE(make_path(q, {q.find_arrow("alpha").value(), q.find_arrow("mu").value()}));
  EXPECT_EQ(path_to_string(q, path_of(q, {"alpha", "gamma"})), "alpha*gamma");
  EXPECT_EQ(path_to_string(q, Path::trivial(2)), "e(3)");
  EXPECT_TRUE(contains_factor({1, 2, 3}, {2, 3}));
  EXPECT_FALSE(contains_factor({1, 2, 3}, {1, 3}));
}
