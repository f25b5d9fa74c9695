#include <gtest/gtest.h>

#include "teamwb/closure.h"
#include "teamwb/harness.h"
#include "teamwb/pool.h"
#include "teamwb/synthesis.h"

namespace teamwb {
namespace {

using P = ClosurePropertyKind;
constexpr Team kP1Q1 = 1u << 3, kP1Q0 = 1u << 2, kP0Q1 = 1u << 1;

const Context& pq() {
  static const Context c({"p", "q"});
  return c;
}

TeamProposition props(std::vector<Team> teams) { return TeamProposition::from_teams(pq(), teams); }

// Direct quantification over team tuples.
bool brute(const TeamProposition& p, P kind) {
  const Team n = static_cast<Team>(p.universe());
  switch (kind) {
    case P::EmptyTeam:
      return p.contains(0);
    case P::Downward:
      for (Team t = 0; t < n; ++t)
        for (Team s = 0; s < n; ++s)
          if (p.contains(t) && (s & ~t) == 0 && !p.contains(s)) return false;
      return true;
    case P::Upward:
      for (Team t = 0; t < n; ++t)
        for (Team s = 0; s < n; ++s)
          if (p.contains(t) && (t & ~s) == 0 && !p.contains(s)) return false;
      return true;
    case P::UnionClosed:
      for (Team t = 0; t < n; ++t)
        for (Team s = 0; s < n; ++s)
          if (p.contains(t) && p.contains(s) && !p.contains(s | t)) return false;
      return true;
    case P::IntersectionClosed:
      for (Team t = 0; t < n; ++t)
        for (Team s = 0; s < n; ++s)
          if (p.contains(t) && p.contains(s) && !p.contains(s & t)) return false;
      return true;
    case P::Convex:
      for (Team s = 0; s < n; ++s)
        for (Team t = 0; t < n; ++t)
          for (Team r = 0; r < n; ++r)
            if (p.contains(s) && p.contains(t) && (s & ~r) == 0 && (r & ~t) == 0 && !p.contains(r))
              return false;
      return true;
    case P::Flat: {
      Team all = 0;
      p.for_each([&](Team t) { all |= t; });
      for (Team t = 0; t < n; ++t)
        if (((t & ~all) == 0) != p.contains(t)) return false;
      return true;
    }
  }
  return false;
}

TEST(HasProperty, SpecimenPropositions) {
  const auto flat = denotation(flat_formula_for_team(kP1Q0 | kP0Q1, pq()), pq());
  EXPECT_TRUE(satisfies(flat, P::Flat));

  const Team t = kP1Q1, s = kP0Q1;
  TeamProposition up(pq());
  for (Team r = 0; r < 16; ++r)
    if ((r & t) == t || (r & s) == s) up.insert(r);
  EXPECT_TRUE(satisfies(up, P::Upward));
  EXPECT_FALSE(satisfies(up, P::IntersectionClosed));

  const Team a = kP1Q1 | kP1Q0, b = kP1Q1 | kP0Q1;
  const auto three = props({a, b, a & b});
  EXPECT_TRUE(satisfies(three, P::IntersectionClosed));
  EXPECT_FALSE(satisfies(three, P::Upward));
  EXPECT_FALSE(satisfies(three, P::Downward));

  const TeamProposition none(pq());
  for (P k : kAllClosureProperties)
    EXPECT_EQ(satisfies(none, k), k != P::EmptyTeam && k != P::Flat) << property_name(k);
}

TEST(HasProperty, MatchesBruteForceOnPool) {
  const Pool pool = enumerate_pool(PoolSignature::standard(pq(), 3));
  for (const auto& d : pool.denotations)
    for (P k : kAllClosureProperties) {
      const PropertyCheck c = has_property(d, k);
      ASSERT_EQ(c.holds, brute(d, k)) << property_name(k);
      if (!c.holds) ASSERT_TRUE(witness_violates(d, k, c.witness)) << property_name(k);
    }
}

TEST(HasProperty, MatchesBruteForceOnArbitraryPropositions) {
  const Context one({"p"});
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    TeamProposition d(one);
    for (Team t = 0; t < 4; ++t)
      if ((bits >> t) & 1) d.insert(t);
    for (P k : kAllClosureProperties) EXPECT_EQ(satisfies(d, k), brute(d, k));
  }
  for (std::uint32_t seed = 1; seed < 400; ++seed) {
    TeamProposition d(pq());
    for (Team t = 0; t < 16; ++t)
      if (((seed * 0x9E3779B1u) >> (t + 5)) & 1) d.insert(t);
    for (P k : kAllClosureProperties) ASSERT_EQ(satisfies(d, k), brute(d, k)) << seed;
  }
}

TEST(HasProperty, WitnessShapes) {
  EXPECT_EQ(has_property(props({kP1Q0}), P::EmptyTeam).witness, (std::vector<Team>{0}));
  EXPECT_EQ(has_property(props({kP1Q0}), P::Downward).witness, (std::vector<Team>{kP1Q0, 0}));
  EXPECT_EQ(has_property(props({kP1Q0, kP0Q1}), P::UnionClosed).witness,
            (std::vector<Team>{kP0Q1, kP1Q0, kP0Q1 | kP1Q0}));
  EXPECT_EQ(has_property(props({0, kP1Q0 | kP0Q1}), P::Convex).witness.size(), 3u);
}

TEST(ClosureProfile, Formulas) {
  const auto ne = closure_profile(parse("NE"), pq());
  EXPECT_TRUE(ne.at(P::Upward).holds);
  EXPECT_TRUE(ne.at(P::UnionClosed).holds);
  EXPECT_FALSE(ne.at(P::EmptyTeam).holds);
  EXPECT_TRUE(closure_profile(parse("p"), pq()).at(P::Flat).holds);
  EXPECT_FALSE(closure_profile(parse("nabla p"), pq()).at(P::Downward).holds);
}

TEST(ClosureProfile, MightOfTopHoldsEverywhere) {
  // Every nonempty team has a nonempty subteam satisfying top.
  EXPECT_TRUE(denotation(parse("nabla top"), pq()).is_full());
  EXPECT_TRUE(closure_profile(parse("nabla top"), pq()).at(P::Downward).holds);
}

TEST(PropertyByEntailment, AgreesWithChecker) {
  const Pool pool = enumerate_pool(PoolSignature::standard(pq(), 3));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (P k : {P::EmptyTeam, P::Downward, P::UnionClosed, P::IntersectionClosed, P::Flat})
      ASSERT_EQ(property_by_entailment(pool.formulas[i], pq(), k), satisfies(pool.denotations[i], k))
          << render(pool.formulas[i]) << " " << property_name(k);
}

TEST(Characterization, SingleFormulas) {
  EXPECT_TRUE(check_characterization(parse("nabla p"), pq(), Characterization::UnionIdem).ok());
  EXPECT_TRUE(check_characterization(parse("p vv q"), pq(), Characterization::UnionIdem).ok());
  EXPECT_FALSE(satisfies(denotation(parse("p vv q"), pq()), P::UnionClosed));
  EXPECT_TRUE(check_characterization(parse("bot"), pq(), Characterization::IntersectionIdem).ok());
  EXPECT_EQ(characterization_name(Characterization::ConvexDia), "convex-dia");
  EXPECT_EQ(characterization_from_name("downward-distr"), Characterization::DownwardDistr);
  EXPECT_FALSE(characterization_from_name("nope"));
}

TEST(Characterization, ZeroDisagreementsOverPool) {
  const Pool pool = enumerate_pool(PoolSignature::standard(pq(), 3));
  for (Characterization c : kAllCharacterizations) {
    const auto r = check_characterization_pool(pool.formulas, pq(), c, pool.signature.description());
    EXPECT_TRUE(r.ok()) << characterization_name(c) << ": " << (r.ok() ? "" : r.disagreements.front());
    EXPECT_EQ(r.agreements, pool.size());
  }
}

TEST(Characterization, RandomPropositionsViaExactFormulas) {
  // Disjunctions of exact team formulas denote arbitrary sets of nonempty teams.
  for (std::uint32_t seed = 1; seed < 40; ++seed) {
    Formula f = Formula::bot();
    bool first = true;
    for (Team t = 1; t < 16; ++t) {
      if (!(((seed * 0x85EBCA6Bu) >> (t + 2)) & 1)) continue;
      const Formula e = exact_team_formula(t, pq());
      f = first ? e : Formula::binary(Kind::GlobalOr, f, e);
      first = false;
    }
    for (Characterization c : {Characterization::UnionIdem, Characterization::IntersectionIdem,
                               Characterization::ConvexDia, Characterization::ConvexBdiaForward})
      EXPECT_TRUE(check_characterization(f, pq(), c).ok()) << render(f);
  }
}

}  // namespace
}  // namespace teamwb
