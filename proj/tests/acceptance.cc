// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "teamwb/closure.h"
#include "teamwb/harness.h"
#include "teamwb/pool.h"
#include "teamwb/synthesis.h"

using namespace teamwb;

namespace {

using Clock = std::chrono::steady_clock;
using P = ClosurePropertyKind;

constexpr Team kP1Q1 = 1u << 3, kP1Q0 = 1u << 2, kP0Q1 = 1u << 1;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const Context& pq() {
  static const Context c({"p", "q"});
  return c;
}

const Pool& pool2() {
  static const Pool pool = enumerate_pool(PoolSignature::standard(standard_context(2), 3));
  return pool;
}

Outcome ac1() {
  Outcome o;
  const auto start = Clock::now();
  const Formula premise = parse("nabla p /\\ (p \\/ q)");
  const auto r = entails({premise}, parse("(nabla p /\\ p) \\/ (nabla p /\\ q)"), pq());
  if (r.holds) o.fail("entailment holds");
  else if (r.counterexample != (kP1Q0 | kP0Q1))
    o.fail("counterexample " + pq().team_label(*r.counterexample));
  if (!eval(premise, kP1Q0 | kP0Q1, pq())) o.fail("premise false on the team");
  if (Clock::now() - start > std::chrono::seconds(1)) o.fail("slower than 1 s");
  o.detail = o.pass ? "counterexample " + pq().team_label(kP1Q0 | kP0Q1) : o.detail;
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto start = Clock::now();
  const Team t = kP1Q1 | kP1Q0;
  if (!eval(parse("p /\\ (q ovv bdia ~p) /\\ bdia q"), t, pq())) o.fail("premise side false");
  if (eval(parse("(p /\\ q) ovv (p /\\ bdia ~p)"), t, pq())) o.fail("conclusion side true");
  if (Clock::now() - start > std::chrono::seconds(1)) o.fail("slower than 1 s");
  return o;
}

Outcome characterizations(std::initializer_list<Characterization> ids) {
  Outcome o;
  const auto start = Clock::now();
  std::size_t agreements = 0;
  for (Characterization c : ids) {
    const auto r = check_characterization_pool(pool2().formulas, pq(), c, pool2().signature.description());
    agreements += r.agreements;
    if (!r.ok())
      o.fail(std::string(characterization_name(c)) + ": " + r.disagreements.front());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > 60) o.fail("slower than 60 s");
  if (o.pass)
    o.detail = std::to_string(agreements) + " agreements over " + std::to_string(pool2().size()) +
               " formulas, " + std::to_string(secs) + " s";
  return o;
}

Outcome ac4() {
  Outcome o;
  for (std::size_t i = 0; i < pool2().size(); ++i) {
    const Formula& f = pool2().formulas[i];
    const bool convex = satisfies(pool2().denotations[i], P::Convex);
    const auto r = entails({Formula::unary(Kind::BlackDia, f), Formula::binary(Kind::OuterGlobalOr, f, f)}, f, pq());
    if (convex && !r.holds) o.fail("convex but refuted: " + render(f));
    if (!convex && !pool2().denotations[i].contains(0) && r.holds) o.fail("non-convex but holds: " + render(f));
  }
  if (o.pass) o.pass = check_characterization_pool(pool2().formulas, pq(), Characterization::ConvexBdiaForward, "").ok();
  return o;
}

Outcome ac5() {
  Outcome o = characterizations({Characterization::DownwardDistr});
  std::size_t refuted = 0;
  for (std::size_t i = 0; i < pool2().size(); ++i) {
    const Formula& f = pool2().formulas[i];
    if (satisfies(pool2().denotations[i], P::Downward)) continue;
    const auto w = distributivity_witnesses(f, pq());
    if (!w) {
      o.fail("no witness for " + render(f));
      continue;
    }
    const auto r = entails({Formula::binary(Kind::And, f, Formula::binary(Kind::TensorOr, w->psi, w->chi))},
                           Formula::binary(Kind::TensorOr, Formula::binary(Kind::And, f, w->psi),
                                           Formula::binary(Kind::And, f, w->chi)),
                           pq());
    if (r.holds) o.fail("witness does not refute " + render(f));
    else ++refuted;
  }
  if (o.pass) o.detail += ", " + std::to_string(refuted) + " non-downward formulas refuted";
  return o;
}

Outcome ac6() {
  Outcome o;
  for (int n : {2, 3}) {
    const Context c = standard_context(n);
    for (Team t = 0; t < c.num_teams(); ++t) {
      if (denotation(flat_formula_for_team(t, c), c) != ops::powerset(c.num_teams(), t))
        o.fail("alpha at " + c.team_label(t));
      if (denotation(exact_team_formula(t, c), c) != TeamProposition::from_teams(c, {t}))
        o.fail("theta at " + c.team_label(t));
    }
  }
  if (o.pass) o.detail = "16 + 256 teams";
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto b = named_counterexample("thm3-intersection");
  const Team s = kP1Q1 | kP1Q0, t = kP1Q1 | kP0Q1;
  const Formula premise = Formula::binary(
      Kind::And, exact_team_formula(s & t, b.context),
      Formula::binary(Kind::TensorAnd, exact_team_formula(s, b.context), exact_team_formula(t, b.context)));
  if (!eval(premise, s & t, b.context)) o.fail("premise not satisfied by S∩T");
  if (b.witness != (s & t)) o.fail("bundle witness " + b.context.team_label(b.witness));
  if (!denotation(b.conclusion, b.context).empty()) o.fail("consequent satisfiable");
  if (!verify_bundle(b)) o.fail("bundle does not verify");
  return o;
}

Outcome ac8() {
  Outcome o;
  for (const char* s : {"p lin-> p", "bdia p rel-> bdia p"}) {
    const auto r = entails({}, parse(s), pq());
    if (r.holds || !r.counterexample) o.fail(std::string(s) + " valid");
    else if (eval(parse(s), *r.counterexample, pq())) o.fail("counterexample does not falsify");
    else o.detail += std::string(o.detail.empty() ? "" : ", ") + s + " fails at " + pq().team_label(*r.counterexample);
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  const auto start = Clock::now();
  const TableReport r = reproduce_tables();
  std::string bad;
  for (const auto& c : r.cells) {
    if (c.verdict == "skipped" || c.agrees) continue;
    bad += (bad.empty() ? "" : "; ") + c.conditional + "/" + c.column + " printed '" + c.expected + "' got " + c.verdict;
    for (const auto& check : c.checks)
      if (check.report.refuted() && !check.report.counterexample->verified) o.fail("unverified counterexample");
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (r.skipped() != 2) o.fail(std::to_string(r.skipped()) + " skipped cells");
  if (!bad.empty()) o.fail("disagreeing cells: " + bad);
  const std::string summary = std::to_string(r.agreeing()) + "/" + std::to_string(r.formalizable()) +
                              " formalizable cells agree, " + std::to_string(r.skipped()) + " skipped, " +
                              std::to_string(secs) + " s";
  o.detail = o.pass ? summary : summary + "; " + o.detail;
  return o;
}

Outcome ac10() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<PoolSignature> sigs{PoolSignature::standard(standard_context(n), 3)};
    PoolSignature all = PoolSignature::standard(standard_context(n), 2);
    all.connectives.clear();
    for (const auto& m : all_connectives())
      if (m.kind != Kind::Atom) all.connectives.push_back(m.kind);
    sigs.push_back(all);
    for (const auto& sig : sigs) {
      const Pool pool = enumerate_pool(sig);
      RecursiveEvaluator rec(sig.context);
      DenotationEngine engine(sig.context);
      for (const auto& f : pool.formulas) {
        const TeamProposition d = engine.denote(f);
        for (Team t = 0; t < sig.context.num_teams(); ++t, ++checked)
          if (rec.eval(f, t) != d.contains(t)) o.fail(render(f) + " at " + sig.context.team_label(t));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " formula/team pairs";
  return o;
}

Outcome ac11() {
  Outcome o;
  const Pool& pool = pool2();
  auto consistent = [&](const CheckReport& r, const std::string& what) {
    if (r.refuted()) o.fail(what + " refuted");
  };
  consistent(check_preservation(P::Upward, Kind::UpImp, pool), "up-> upward");
  consistent(check_preservation(PropertySet{P::Upward, P::IntersectionClosed}, Kind::UpImp, pool),
             "up-> upward+intersection");
  consistent(check_preservation(P::Downward, Kind::IntImp, pool), "-> downward");
  consistent(check_preservation(P::Convex, Kind::IntImp, pool), "-> convex");
  const auto u = check_preservation(P::UnionClosed, Kind::IntImp, pool);
  if (!u.refuted() || !u.counterexample->verified) {
    o.fail("-> union not refuted with a verified counterexample");
  } else {
    const auto& inst = u.counterexample->instantiation;
    const Formula f = Formula::binary(Kind::IntImp, parse(inst.at(0).second), parse(inst.at(1).second));
    if (satisfies(denotation(f, pq()), P::UnionClosed)) o.fail("counterexample is union closed");
    else o.detail = "-> union refuted by " + render(f);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 might-over-tensor counterexample", ac1},
      {"AC2 outer disjunction example", ac2},
      {"AC3 idempotence characterizations",
       [] {
         return characterizations({Characterization::UnionIdem, Characterization::IntersectionIdem,
                                   Characterization::ConvexDia});
       }},
      {"AC4 convexity one-sided check", ac4},
      {"AC5 downward closure and distributivity", ac5},
      {"AC6 synthesis exactness", ac6},
      {"AC7 intersection counterexample bundle", ac7},
      {"AC8 invalid conditional identities", ac8},
      {"AC9 table reproduction", ac9},
      {"AC10 dual evaluator oracle", ac10},
      {"AC11 conditional preservation suite", ac11},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("%s %s%s%s\n", o.pass ? "PASS" : "FAIL", name, o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
