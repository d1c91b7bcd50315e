#include <gtest/gtest.h>

#include "common.hpp"

using namespace findim;
using namespace testing_util;

namespace {

std::vector<Estimate> simple_pdims(const AlgebraModel& a) {
  std::vector<Estimate> out;
  for (int v = 0; v < a.vertex_count(); ++v) out.push_back(Estimate::of(pdim_simple(a, v)));
  return out;
}

BoundsInput all_infinite(int n, int loewy) {
  BoundsInput in;
  in.n = n;
  in.loewy_length = loewy;
  in.simple_pdims.assign(n, Estimate::infinite());
  return in;
}

} // namespace

TEST(Interval, ParallelArrows) {
  const auto a = parallel_arrows();
  EXPECT_EQ(compute_s(a), 1);
  const FindimInterval iv = findim_interval(a);
  EXPECT_EQ(iv.lower, 2);
  EXPECT_EQ(iv.upper, 3);
  EXPECT_FALSE(iv.empty_sup);
  ASSERT_TRUE(iv.witness);
  EXPECT_EQ(io::print_module_expr(a.quiver(), *iv.witness), "Q(2; epsilon)");
  // The witness really has pdim s + 1.
  const BasedAlgebra alg = to_based(a);
  const auto w = to_matrix_module(alg, *iv.witness, monomial_resolver(a));
  EXPECT_EQ(oracle::pdim_upto(alg, w, 6).value, 2);
}

TEST(Interval, OneLoop) {
  const AlgebraModel a(one_loop());
  const FindimInterval iv = findim_interval(a);
  EXPECT_EQ(iv.s, -1);
  EXPECT_TRUE(iv.empty_sup);
  EXPECT_EQ(iv.lower, 0);
  EXPECT_EQ(iv.upper, 1);
  EXPECT_FALSE(iv.witness);
}

TEST(Interval, Hereditary) {
  const AlgebraModel a(io::parse_algebra(read_data("hereditary_a3.qalg")).presentation);
  EXPECT_EQ(compute_s(a), 0);
  EXPECT_EQ(findim_interval(a).upper, 2);
}

TEST(Repetition, EngineExamples) {
  const auto a = parallel_arrows();
  EXPECT_EQ(repetition_index(a, {ModuleTerm::simple(0)}), 2);
  EXPECT_EQ(repetition_index(a, {ModuleTerm::simple(2)}), 1);
  EXPECT_EQ(repetition_index(a, {ModuleTerm::simple(3)}), 0);
  EXPECT_EQ(repetition_index(a, {ModuleTerm::ideal(a.trivial(0))}), 0);
  EXPECT_EQ(repetition_index(a, {}), 0);
  const AlgebraModel loop(one_loop());
  EXPECT_EQ(repetition_index(loop, all_simples(loop)), 0);
}

TEST(Repetition, EngineMatchesOracleOnParallelArrows) {
  const auto a = parallel_arrows();
  const BasedAlgebra alg = to_based(a);
  for (int v = 0; v < a.vertex_count(); ++v)
    EXPECT_EQ(repetition_index(a, {ModuleTerm::simple(v)}),
              oracle::repetition_index_bounded(alg, oracle::simple_module(alg, v), 10).value)
        << v;
}

TEST(Repetition, RightRhoParallelArrows) {
  const IzBounds iz = iz_bounds(parallel_arrows());
  EXPECT_EQ(iz.rho_right, 3);
  EXPECT_EQ(iz.dim_J, 8u);
  EXPECT_TRUE(iz.dimJ_check);
  EXPECT_EQ(iz_bounds(AlgebraModel(one_loop())).rho_right, 0);
}

TEST(Bounds, ParallelArrows) {
  const auto a = parallel_arrows();
  const BoundsReport b = classical_bounds(a, simple_pdims(a));
  EXPECT_FALSE(b.get("mochizuki_j2").holds);
  EXPECT_FALSE(b.get("mochizuki_j2").value);
  // sup of finite simple pdims 1, two infinite simples.
  EXPECT_EQ(b.get("gzh_mixed_j3").value, 6);
  EXPECT_FALSE(b.get("gzh_2n_j3").holds);
  EXPECT_EQ(b.get("gzh_n2plus1_j3").value, 17);
  EXPECT_EQ(b.get("iz_rho_right").value, 3);
  EXPECT_EQ(b.get("iz_dimJ").value, 8);
  EXPECT_FALSE(b.get("tiled_shift").holds);
  EXPECT_THROW(b.get("nope"), std::out_of_range);
}

TEST(Bounds, Formulas) {
  const BoundsReport three = classical_bounds(all_infinite(3, 3));
  EXPECT_EQ(three.get("gzh_2n_j3").value, 6);
  EXPECT_EQ(three.get("gzh_n2plus1_j3").value, 10);
  EXPECT_EQ(three.get("gzh_mixed_j3").value, 6);
  const BoundsReport big = classical_bounds(all_infinite(21, 3));
  EXPECT_EQ(big.get("gzh_2n_j3").value, 42);
  EXPECT_EQ(big.get("gzh_n2plus1_j3").value, 442);
  const BoundsReport deep = classical_bounds(all_infinite(3, 4));
  EXPECT_FALSE(deep.get("gzh_2n_j3").holds);
  EXPECT_FALSE(deep.get("gzh_n2plus1_j3").value);
}

TEST(Bounds, EmptySupremum) {
  const BoundsReport b = classical_bounds(all_infinite(1, 2));
  EXPECT_EQ(b.get("mochizuki_j2").value, 0);
  EXPECT_EQ(b.get("mochizuki_j2").note, "sup over the empty set taken as -1");
}

TEST(Bounds, UndeterminedInputs) {
  BoundsInput in = all_infinite(2, 2);
  in.simple_pdims[0] = Estimate::undetermined(5);
  const BoundsReport b = classical_bounds(in);
  EXPECT_TRUE(b.get("mochizuki_j2").holds);
  EXPECT_FALSE(b.get("mochizuki_j2").value);
  EXPECT_FALSE(b.get("gzh_2n_j3").holds);
  EXPECT_FALSE(b.get("iz_rho_right").holds);
}

TEST(Bounds, TiledShift) {
  BoundsInput in = all_infinite(2, 3);
  in.tiled = true;
  EXPECT_FALSE(classical_bounds(in).get("tiled_shift").value);
  in.findim_lambda = 2;
  EXPECT_EQ(classical_bounds(in).get("tiled_shift").value, 3);
}

TEST(Bounds, LoopedCycle) {
  for (int n : {1, 4}) {
    const AlgebraModel a(looped_cycle(n));
    EXPECT_EQ(a.loewy_length(), 3);
    EXPECT_EQ(a.dimension(), static_cast<std::size_t>(4 * n));
    const auto pd = simple_pdims(a);
    for (const auto& p : pd) EXPECT_TRUE(p.is_infinite());
    const BoundsReport b = classical_bounds(a, pd);
    EXPECT_EQ(b.get("gzh_2n_j3").value, 2 * n);
    EXPECT_LE(compute_s(a) + 1, 2 * n);
  }
}

TEST(Estimate, Strings) {
  EXPECT_EQ(Estimate::finite(3).str(), "3");
  EXPECT_EQ(Estimate::infinite().str(), "infinity");
  EXPECT_EQ(Estimate::undetermined(7).str(), "undetermined (> 7)");
  EXPECT_EQ(Estimate::of(oracle::BoundedPdim{std::nullopt, 4}), Estimate::undetermined(4));
  EXPECT_EQ(Estimate::of(NatInf(2)), Estimate::finite(2));
}

TEST(Search, ParallelArrowsFindsDepthThree) {
  const auto a = parallel_arrows();
  const BasedAlgebra alg = to_based(a);
  const FindimWitness w = findim_search(alg, 8);
  EXPECT_EQ(w.pdim, 3);
  EXPECT_NE(w.description.find("alpha + beta"), std::string::npos) << w.description;
  EXPECT_EQ(findim_search(alg, 8, 1).pdim, 1);
}

TEST(ModuleExprs, Conversions) {
  const auto doc = parallel_doc();
  const AlgebraModel a(doc.presentation);
  const BasedAlgebra alg = to_based(a);
  const Quiver& q = a.quiver();
  auto sum = to_engine_sum(a, io::parse_module_expr("S(1) + P(2) + I(alpha*gamma)", q), {});
  ASSERT_TRUE(sum);
  EXPECT_EQ(sum->count(), 3u);
  EXPECT_FALSE(to_engine_sum(a, io::parse_module_expr("W", q, doc.modules), doc.modules));
  const auto w = to_matrix_module(alg, io::parse_module_expr("W + W", q, doc.modules), monomial_resolver(a),
                                  doc.modules);
  EXPECT_EQ(w.dimension(), 4u);
  // Q with the trivial path is the zero module, with an empty element the projective.
  EXPECT_TRUE(to_matrix_module(alg, io::parse_module_expr("Q(1; e(1))", q), monomial_resolver(a)).is_zero());
  EXPECT_THROW(to_matrix_module(alg, io::parse_module_expr("I(alpha*delta)", q), monomial_resolver(a)),
               NotABasisPath);
}

TEST(ModuleExprs, SelfReferenceIsBounded) {
  io::AlgebraDocument doc = parallel_doc();
  io::SummandExpr self;
  self.kind = io::SummandExpr::Kind::named;
  self.name = "L";
  doc.modules.push_back({"L", io::ModuleExpr{{self}}});
  EXPECT_THROW(flatten(io::ModuleExpr{{self}}, doc.modules), Error);
}
