#include <gtest/gtest.h>

#include "teamwb/closure.h"
#include "teamwb/errors.h"
#include "teamwb/harness.h"
#include "teamwb/pool.h"
#include "teamwb/semantics.h"

namespace teamwb {
namespace {

// Valuation masks at context (p,q).
constexpr Team kP1Q1 = 1u << 3, kP1Q0 = 1u << 2, kP0Q1 = 1u << 1, kP0Q0 = 1u << 0;

const Context& pq() {
  static const Context c({"p", "q"});
  return c;
}

bool holds(const char* f, Team t, const Context& ctx = pq()) { return eval(parse(f), t, ctx); }

TEST(Context, Basics) {
  const Context c = Context::from_list("p,q");
  EXPECT_EQ(c.num_valuations(), 4);
  EXPECT_EQ(c.num_teams(), 16u);
  EXPECT_EQ(c.valuation_label(2), "(p1,q0)");
  EXPECT_EQ(c.team_label(kP1Q0 | kP0Q1), "{(p0,q1),(p1,q0)}");
  EXPECT_EQ(c.team_from_rows({{1, 0}, {0, 1}}), kP1Q0 | kP0Q1);
  EXPECT_THROW(c.team_from_rows({{1, 0}, {1, 0}}), ContextError);
  EXPECT_THROW(c.team_from_rows({{1, 2}}), ContextError);
  EXPECT_EQ(c.true_set(0), kP1Q1 | kP1Q0);
}

TEST(Context, Validation) {
  EXPECT_THROW(Context({"p", "p"}), ContextError);
  EXPECT_THROW(Context({"P"}), ContextError);
  EXPECT_THROW(Context::from_list("p,q,r,s,t"), CapExceeded);
  EXPECT_THROW(Context::from_list("p,q,r,s,t", 5), CapExceeded);
  EXPECT_THROW(Context::from_list("p,q,r", 2), CapExceeded);
  EXPECT_NO_THROW(Context::from_list("p,q,r,s"));
  EXPECT_THROW(eval(parse("r"), 0, pq()), ContextError);
}

TEST(Eval, MightOverTensor) {
  EXPECT_TRUE(holds("nabla p /\\ (p \\/ q)", kP1Q0 | kP0Q1));
  EXPECT_FALSE(holds("(nabla p /\\ p) \\/ (nabla p /\\ q)", kP1Q0 | kP0Q1));
}

TEST(Eval, OuterGlobalDisjunctionNeedsAmbientSuperteam) {
  EXPECT_TRUE(holds("p /\\ (q ovv bdia ~p) /\\ bdia q", kP1Q1 | kP1Q0));
  EXPECT_FALSE(holds("(p /\\ q) ovv (p /\\ bdia ~p)", kP1Q1 | kP1Q0));
}

TEST(Eval, EmptyTeam) {
  EXPECT_TRUE(holds("p", 0));
  EXPECT_FALSE(holds("NE", 0));
  EXPECT_TRUE(holds("bot", 0));
  EXPECT_TRUE(holds("nabla p", 0));
  EXPECT_FALSE(holds("bdia p", 0));
  EXPECT_TRUE(holds("dia p", 0));
}

TEST(Eval, InclusionAtom) {
  EXPECT_TRUE(holds("[1 0 <= p q]", kP1Q0 | kP1Q1));
  EXPECT_FALSE(holds("[1 0 <= p q]", kP1Q1));
}

TEST(Eval, Conditionals) {
  EXPECT_TRUE(holds("p lin-> p", kP1Q1));
  EXPECT_FALSE(holds("p lin-> p", kP0Q1));
  EXPECT_TRUE(holds("p -> p", 15));
  EXPECT_TRUE(holds("NE up-> NE", 0));
  EXPECT_TRUE(holds("p ent-> p \\/ q", 5));
  EXPECT_FALSE(holds("p \\/ q ent-> p", 5));
}

TEST(Denotation, Examples) {
  EXPECT_EQ(denotation(parse("p"), pq()).members(),
            (std::vector<Team>{0, kP1Q0, kP1Q1, kP1Q1 | kP1Q0}));
  const auto ne = denotation(parse("NE"), pq());
  EXPECT_EQ(ne.count(), 15u);
  EXPECT_FALSE(ne.contains(0));
  EXPECT_TRUE(denotation(parse("p ent-> p"), pq()).is_full());
}

TEST(Entails, Examples) {
  const auto r = entails({parse("nabla p /\\ (p \\/ q)")}, parse("(nabla p /\\ p) \\/ (nabla p /\\ q)"), pq());
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(*r.counterexample, kP1Q0 | kP0Q1);
  EXPECT_TRUE(entails({parse("p \\/ p")}, parse("p"), pq()).holds);
  EXPECT_FALSE(entails({}, parse("p lin-> p"), pq()).holds);
  EXPECT_FALSE(entails({}, parse("bdia p rel-> bdia p"), pq()).holds);
  EXPECT_TRUE(entails({parse("bot")}, parse("NE"), pq()).holds == false);
  EXPECT_TRUE(entails({parse("NE"), parse("bot")}, parse("q"), pq()).holds);
}

TEST(Entails, CounterexampleIsFirstInOrder) {
  for (const char* c : {"q", "NE", "p /\\ q", "p \\/ q"}) {
    const auto r = entails({parse("p vv q")}, parse(c), pq());
    if (r.holds) continue;
    ASSERT_TRUE(r.counterexample);
    for (Team t = 0; t < *r.counterexample; ++t)
      EXPECT_FALSE(holds("p vv q", t) && !holds(c, t)) << c;
  }
}

TEST(RestrictTeam, Projection) {
  const Context p({"p"}), q({"q"});
  EXPECT_EQ(restrict_team(kP1Q0 | kP1Q1, pq(), p), 2u);
  EXPECT_EQ(restrict_team(0, pq(), p), 0u);
  EXPECT_EQ(restrict_team(15, pq(), q), 3u);
  EXPECT_THROW(restrict_team(1, p, pq()), ContextError);
}

TEST(Ops, ClosuresAndProducts) {
  const auto a = TeamProposition::from_teams(pq(), {kP1Q0});
  EXPECT_EQ(ops::down_closure(a).members(), (std::vector<Team>{0, kP1Q0}));
  EXPECT_EQ(ops::up_closure(a).count(), 8u);
  EXPECT_EQ(ops::powerset(16, kP1Q0 | kP0Q1).count(), 4u);
  const auto b = TeamProposition::from_teams(pq(), {kP0Q1, 0});
  EXPECT_EQ(ops::union_product(a, b).members(), (std::vector<Team>{kP1Q0, kP1Q0 | kP0Q1}));
  EXPECT_EQ(ops::intersection_product(a, b).members(), (std::vector<Team>{0}));
  EXPECT_EQ(ops::complement_teams(a).members(), (std::vector<Team>{15 & ~kP1Q0}));
  EXPECT_EQ(ops::down_core(ops::down_closure(a)), ops::down_closure(a));
  EXPECT_TRUE(ops::down_core(TeamProposition::from_teams(pq(), {kP1Q0})).empty());
}

TEST(Ops, ProductsMatchBruteForce) {
  const Context c({"p", "q"});
  std::vector<TeamProposition> samples;
  for (std::uint32_t s = 1; s < 200; ++s) {
    TeamProposition x(c);
    for (Team t = 0; t < 16; ++t)
      if (((s * 2654435761u) >> (t + 3)) & 1) x.insert(t);
    samples.push_back(x);
  }
  for (std::size_t i = 0; i < samples.size(); i += 7)
    for (std::size_t j = 0; j < samples.size(); j += 5) {
      TeamProposition u(c), n(c);
      samples[i].for_each([&](Team s) {
        samples[j].for_each([&](Team t) {
          u.insert(s | t);
          n.insert(s & t);
        });
      });
      EXPECT_EQ(ops::union_product(samples[i], samples[j]), u);
      EXPECT_EQ(ops::intersection_product(samples[i], samples[j]), n);
    }
}

// Recursive evaluation against denotation membership.
void expect_evaluators_agree(const Pool& pool) {
  const Context& ctx = pool.signature.context;
  RecursiveEvaluator rec(ctx);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (Team t = 0; t < ctx.num_teams(); ++t)
      ASSERT_EQ(rec.eval(pool.formulas[i], t), pool.denotations[i].contains(t))
          << render(pool.formulas[i]) << " at " << ctx.team_label(t);
}

TEST(DualEvaluator, StandardPools) {
  for (int n = 1; n <= 3; ++n) expect_evaluators_agree(enumerate_pool(PoolSignature::standard(standard_context(n), 3)));
}

TEST(DualEvaluator, AllConnectives) {
  for (int n = 1; n <= 3; ++n) {
    PoolSignature sig = PoolSignature::standard(standard_context(n), 2);
    sig.connectives.clear();
    for (const auto& m : all_connectives())
      if (m.kind != Kind::Atom) sig.connectives.push_back(m.kind);
    expect_evaluators_agree(enumerate_pool(sig));
  }
}

TEST(DualEvaluator, NestedGlobalConnectives) {
  const Context c({"p", "q"});
  for (const char* s : {"(p rel-> q) lin-> (NE min-> p)", "(p tand q) max-> (p ovv bdia q)",
                        "((p ei-> q) ecf-> NE) ec-> (p up-> q)", "(p ent-> q) \\/ ((q ent-> p) tand NE)"}) {
    const Formula f = parse(s);
    const auto d = denotation(f, c);
    RecursiveEvaluator rec(c);
    for (Team t = 0; t < 16; ++t) EXPECT_EQ(rec.eval(f, t), d.contains(t)) << s;
  }
}

TEST(Locality, SubsetQuantifiedFragment) {
  const Context big({"p", "q", "r"});
  PoolSignature sig = PoolSignature::standard(Context({"p", "q"}), 3);
  sig.connectives = {Kind::Neg, Kind::And, Kind::TensorOr, Kind::IntImp, Kind::GlobalOr, Kind::Nabla,
                     Kind::BlackDia, Kind::Dia, Kind::MaxImp, Kind::EpIndic, Kind::EpCf,
                     Kind::EpCond, Kind::NE, Kind::Bot, Kind::Top, Kind::Incl};
  const Pool pool = enumerate_pool(sig);
  for (const auto& f : pool.formulas) {
    const auto fv = free_variables(f);
    if (fv.empty()) continue;
    std::vector<std::string> vars;
    for (const auto& v : big.vars())
      if (fv.count(v)) vars.push_back(v);
    const Context sub(vars);
    for (Team t = 0; t < big.num_teams(); t += 3)
      ASSERT_EQ(eval(f, t, big), eval(f, restrict_team(t, big, sub), sub)) << render(f);
  }
}

TEST(Fragments, ClassicalFormulasAreFlat) {
  const Pool pool = enumerate_pool([] {
    PoolSignature s = PoolSignature::standard(Context({"p", "q"}), 3);
    s.connectives = {Kind::Neg, Kind::And, Kind::TensorOr, Kind::Bot, Kind::Top};
    return s;
  }());
  for (std::size_t i = 0; i < pool.size(); ++i)
    EXPECT_TRUE(satisfies(pool.denotations[i], ClosurePropertyKind::Flat)) << render(pool.formulas[i]);
}

TEST(Fragments, EntailmentConditionalIsTeamIndependent) {
  const Pool pool = enumerate_pool(PoolSignature::standard(Context({"p", "q"}), 2));
  DenotationEngine eng(pool.signature.context);
  for (const auto& a : pool.denotations)
    for (const auto& b : pool.denotations) {
      const auto d = eng.apply(Kind::Entail, a, b);
      EXPECT_TRUE(d.empty() || d.is_full());
      EXPECT_EQ(d.is_full(), a.subset_of(b));
    }
}

TEST(Fragments, DocumentedPreservation) {
  for (int n = 1; n <= 2; ++n) {
    const Pool pool = enumerate_pool(PoolSignature::standard(standard_context(n), 3));
    DenotationEngine eng(pool.signature.context);
    const auto& d = pool.denotations;
    for (const auto& m : all_connectives()) {
      if (m.arity == 0) continue;
      m.preserves.for_each([&](ClosurePropertyKind p) {
        for (std::size_t i = 0; i < d.size(); ++i) {
          if (!satisfies(d[i], p)) continue;
          if (m.arity == 1) {
            ASSERT_TRUE(satisfies(eng.apply(m.kind, d[i]), p)) << m.id << " " << property_name(p);
            continue;
          }
          for (std::size_t j = 0; j < d.size(); ++j)
            if (satisfies(d[j], p))
              ASSERT_TRUE(satisfies(eng.apply(m.kind, d[i], d[j]), p)) << m.id << " " << property_name(p);
        }
      });
    }
  }
}

TEST(Quantification, GlobalDetection) {
  EXPECT_TRUE(uses_global_quantification(parse("p /\\ (q lin-> r)")));
  EXPECT_TRUE(uses_global_quantification(parse("p ent-> q")));
  EXPECT_FALSE(uses_global_quantification(parse("p up-> (q ovv r)")));
}

TEST(FourVariables, StrategiesAgree) {
  const Context c = Context::from_list("p,q,r,s");
  const Formula f = parse("(p rel-> q) \\/ (r /\\ nabla s)");
  const auto d = denotation(f, c);
  RecursiveEvaluator rec(c);
  for (Team t = 0; t < 65536; t += 997) EXPECT_EQ(rec.eval(f, t), d.contains(t));
  for (Team t = 0; t < 65536; t += 4099) EXPECT_EQ(eval(f, t, c), d.contains(t));
}

}  // namespace
}  // namespace teamwb
