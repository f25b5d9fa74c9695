#include <gtest/gtest.h>

#include "teamwb/errors.h"
#include "teamwb/report.h"
#include "teamwb/synthesis.h"

namespace teamwb {
namespace {

const Context& pq() {
  static const Context c({"p", "q"});
  return c;
}

TEST(Json, Team) {
  const Json j = team_json(0b0110, pq());
  EXPECT_EQ(j["label"], "{(p0,q1),(p1,q0)}");
  EXPECT_EQ(j["rows"], Json::parse("[[0,1],[1,0]]"));
}

TEST(Json, EntailmentDocument) {
  const auto premises = std::vector<Formula>{parse("nabla p /\\ (p \\/ q)")};
  const Formula conclusion = parse("(nabla p /\\ p) \\/ (nabla p /\\ q)");
  const Json j = entailment_json(premises, conclusion, pq(), entails(premises, conclusion, pq()));
  EXPECT_EQ(j["format"], 1);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["counterexample"]["label"], "{(p0,q1),(p1,q0)}");
}

TEST(Json, ClosureDocument) {
  const Json j = closure_json(closure_profile(parse("NE"), pq()));
  EXPECT_EQ(j["format"], 1);
  ASSERT_EQ(j["properties"].size(), 7u);
  EXPECT_EQ(j["properties"][0]["property"], "empty-team");
  EXPECT_EQ(j["properties"][0]["holds"], false);
}

TEST(Json, Deterministic) {
  const auto b = named_counterexample("example2-convex");
  EXPECT_EQ(bundle_json(b, true).dump(), bundle_json(named_counterexample("example2-convex"), true).dump());
  EXPECT_EQ(denotation_json(parse("NE"), pq(), denotation(parse("NE"), pq()))["teams"].size(), 15u);
}

TEST(TeamFile, Reads) {
  EXPECT_EQ(read_team_json(R"({"variables":["p","q"],"rows":[[1,0],[0,1]]})", pq()), 0b0110u);
  EXPECT_EQ(read_team_json(R"({"variables":["q","p"],"rows":[[0,1]]})", pq()), 0b0100u);
  EXPECT_EQ(read_team_json(R"({"variables":["p","q"],"rows":[]})", pq()), 0u);
}

TEST(TeamFile, Rejects) {
  EXPECT_THROW(read_team_json(R"({"variables":["p"],"rows":[]})", pq()), ContextError);
  EXPECT_THROW(read_team_json(R"({"variables":["p","q"],"rows":[[1,0],[1,0]]})", pq()), ContextError);
  EXPECT_THROW(read_team_json(R"({"variables":["p","q"],"rows":[[1]]})", pq()), ContextError);
  EXPECT_THROW(read_team_json("not json", pq()), Error);
  EXPECT_THROW(read_team_file("/nonexistent/team.json", pq()), Error);
}

}  // namespace
}  // namespace teamwb
