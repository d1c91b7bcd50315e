#include <gtest/gtest.h>

#include "common.hpp"
#include "findim/report.hpp"

using namespace findim;
using namespace testing_util;

namespace {

AnalysisReport run(const std::string& file, AnalysisOptions opt = {}) {
  std::string text;
  auto ws = Workspace::from_file(data_path(file), &text);
  return analyze(*ws, text, opt);
}

} // namespace

TEST(Digest, Fnv1a) {
  EXPECT_EQ(input_digest(""), "cbf29ce484222325");
  EXPECT_EQ(input_digest("a"), "af63dc4c8601ec8c");
}

TEST(Workspace, Errors) {
  EXPECT_THROW(Workspace::from_file(data_path("missing.qalg")), InputError);
  EXPECT_THROW(Workspace::from_text("", false), SyntaxError);
  EXPECT_THROW(Workspace::from_text("vertices 1\narrow x 1 1\n", false), InfiniteDimensional);
  EXPECT_THROW(Workspace::from_text("0 1\n0 x\n", true), SyntaxError);
}

TEST(Analyze, ParallelArrows) {
  AnalysisOptions opt;
  opt.traces = {"S(1)"};
  opt.trace_steps = 2;
  const AnalysisReport r = run("parallel_arrows.qalg", opt);
  EXPECT_EQ(r.dimension, 12u);
  EXPECT_EQ(r.dim_J, 8u);
  EXPECT_TRUE(r.monomial);
  EXPECT_EQ(r.relations, 11);
  ASSERT_TRUE(r.interval);
  EXPECT_EQ(r.interval->s, 1);
  EXPECT_EQ(r.interval->lower, 2);
  EXPECT_EQ(r.interval->upper, 3);
  EXPECT_EQ(r.interval->witness_pdim, Estimate::finite(2));
  EXPECT_EQ(r.fin_dim.lower, 3);
  EXPECT_TRUE(r.fin_dim.exact());
  EXPECT_EQ(r.rho_right, 3);
  EXPECT_TRUE(r.gl_dim.is_infinite());
  ASSERT_EQ(r.modules.size(), 1u);
  EXPECT_EQ(r.modules[0].pdim, Estimate::finite(3));
  EXPECT_EQ(r.modules[0].method, "oracle");
  ASSERT_EQ(r.traces.size(), 1u);
  ASSERT_EQ(r.traces[0].layers.size(), 3u);
  EXPECT_EQ(r.traces[0].layers[1].str(), "{S2x2} {S2x2}");
  EXPECT_EQ(r.traces[0].layers[2].str(), "{S2x2,S3x2}");
  EXPECT_TRUE(r.undetermined.empty());
  EXPECT_TRUE(r.certified);
  EXPECT_FALSE(r.seconds);
}

TEST(Analyze, OneLoop) {
  const AnalysisReport r = run("one_loop.qalg");
  ASSERT_TRUE(r.interval);
  EXPECT_EQ(r.interval->lower, 0);
  EXPECT_EQ(r.interval->upper, 1);
  EXPECT_EQ(r.rho_right, 0);
  EXPECT_EQ(r.fin_dim.upper, 0);
  EXPECT_TRUE(r.fin_dim.exact());
  EXPECT_EQ(r.bounds.get("mochizuki_j2").value, 0);
}

TEST(Analyze, Tiled5) {
  AnalysisOptions opt;
  opt.cutoff = 8;
  const AnalysisReport r = run("tiled5.tord", opt);
  EXPECT_FALSE(r.monomial);
  EXPECT_EQ(r.dimension, 25u);
  EXPECT_FALSE(r.interval);
  ASSERT_TRUE(r.tiled);
  EXPECT_EQ(r.tiled->order_lower, 3);
  EXPECT_EQ(r.tiled->order_upper, 3);
  EXPECT_EQ(r.fin_dim.lower, 2);
  EXPECT_EQ(r.fin_dim.upper, 2);
  EXPECT_EQ(r.sides.at(0).simple_rho.at(0), 1);
  EXPECT_EQ(r.bounds.get("tiled_shift").value, 3);
}

TEST(Analyze, SideSelection) {
  AnalysisOptions opt;
  opt.side = Side::right;
  const AnalysisReport r = run("parallel_arrows.qalg", opt);
  ASSERT_EQ(r.sides.size(), 1u);
  EXPECT_EQ(r.sides[0].side, "right");
  opt.side = Side::both;
  EXPECT_EQ(run("parallel_arrows.qalg", opt).sides.size(), 2u);
}

TEST(Analyze, SmallCutoffIsUndetermined) {
  AnalysisOptions opt;
  opt.cutoff = 1;
  const AnalysisReport r = run("tiled5.tord", opt);
  EXPECT_FALSE(r.undetermined.empty());
}

TEST(Report, JsonShapeAndDeterminism) {
  AnalysisOptions opt;
  opt.seed = 7;
  const std::string a = to_json_text(run("parallel_arrows.qalg", opt));
  const std::string b = to_json_text(run("parallel_arrows.qalg", opt));
  EXPECT_EQ(a, b);
  const Json j = Json::parse(a);
  EXPECT_EQ(j["tool"]["name"], "findim");
  EXPECT_EQ(j["settings"]["seed"], 7);
  EXPECT_EQ(j["s"]["value"], 1);
  EXPECT_EQ(j["findim_interval"]["witness"], "Q(2; epsilon)");
  EXPECT_EQ(j["gl_dim"], Json({{"finite", false}}));
  EXPECT_EQ(j["modules"][0]["pdim"], Json({{"finite", true}, {"value", 3}}));
  EXPECT_FALSE(j.contains("timing"));
  EXPECT_EQ(j["input"]["digest"], "fnv1a64:" + input_digest(read_data("parallel_arrows.qalg")));
}

TEST(Report, EstimateJson) {
  EXPECT_EQ(to_json(Estimate::undetermined(4)).dump(), R"({"undetermined":true,"cutoff":4})");
  EXPECT_EQ(to_json(Estimate::finite(0)).dump(), R"({"finite":true,"value":0})");
}

TEST(Report, TextMentionsKeyFacts) {
  const std::string t = to_text(run("parallel_arrows.qalg"));
  EXPECT_NE(t.find("fin dim: 3"), std::string::npos) << t;
  EXPECT_NE(t.find("s = 1; fin dim and Fin dim lie in [2, 3]"), std::string::npos) << t;
}

TEST(Pdim, ModulePdim) {
  auto ws = Workspace::from_file(data_path("parallel_arrows.qalg"));
  AnalysisOptions opt;
  auto p = module_pdim(*ws, ws->parse("Q(2; epsilon)"), opt);
  EXPECT_EQ(p.pdim, Estimate::finite(2));
  EXPECT_EQ(p.method, "engine");
  EXPECT_EQ(module_pdim(*ws, ws->parse("S(3) + P(1)"), opt).pdim, Estimate::finite(1));
  EXPECT_EQ(module_pdim(*ws, ws->parse("W"), opt).pdim, Estimate::finite(3));
  opt.cutoff = 2;
  EXPECT_EQ(module_pdim(*ws, ws->parse("W"), opt).pdim, Estimate::undetermined(2));
}
