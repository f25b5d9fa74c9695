#include "teamwb/synthesis.h"

#include "teamwb/closure.h"
#include "teamwb/errors.h"

namespace teamwb {

namespace {

Formula literals(int valuation, const Context& ctx) {
  std::optional<Formula> acc;
  for (int k = 0; k < ctx.size(); ++k) {
    Formula lit = Formula::atom(ctx.vars()[k]);
    if (!ctx.value(valuation, k)) lit = Formula::unary(Kind::Neg, lit);
    acc = acc ? Formula::binary(Kind::And, *acc, lit) : lit;
  }
  return *acc;
}

Formula disjunction_over(Team t, const Context& ctx, bool nonempty) {
  std::optional<Formula> acc;
  for (int v = 0; v < ctx.num_valuations(); ++v) {
    if (!((t >> v) & 1)) continue;
    Formula d = literals(v, ctx);
    if (nonempty) d = Formula::binary(Kind::And, d, Formula::ne());
    acc = acc ? Formula::binary(Kind::TensorOr, *acc, d) : d;
  }
  return acc ? *acc : Formula::bot();
}

Formula conj(const Formula& a, const Formula& b) { return Formula::binary(Kind::And, a, b); }

}  // namespace

Formula flat_formula_for_team(Team t, const Context& ctx) {
  return disjunction_over(t, ctx, false);
}

Formula exact_team_formula(Team t, const Context& ctx) { return disjunction_over(t, ctx, true); }

std::optional<DistributivityWitness> distributivity_witnesses(const Formula& f,
                                                             const Context& ctx) {
  const auto check = has_property(denotation(f, ctx), ClosurePropertyKind::Downward);
  if (check.holds) return std::nullopt;
  const Team t = check.witness[0];
  const Team s = check.witness[1];
  return DistributivityWitness{flat_formula_for_team(s, ctx), flat_formula_for_team(t & ~s, ctx),
                               t};
}

const std::vector<std::string>& counterexample_ids() {
  static const std::vector<std::string> ids = {"example1", "example2-convex", "ne-union",
                                               "thm3-intersection"};
  return ids;
}

CounterexampleBundle named_counterexample(std::string_view id) {
  const Context ctx({"p", "q"});
  // Valuation indices at (p,q): 3=(p1,q1) 2=(p1,q0) 1=(p0,q1) 0=(p0,q0).
  const Team p1q1 = 1u << 3, p1q0 = 1u << 2, p0q1 = 1u << 1;
  if (id == "example1") {
    const Formula lhs = parse("nabla p /\\ (p \\/ q)");
    const Formula rhs = parse("(nabla p /\\ p) \\/ (nabla p /\\ q)");
    return {std::string(id),
            "might-distributivity fails: nabla p /\\ (p \\/ q) does not entail its distributed form",
            ctx,
            {{"phi", parse("nabla p")}, {"psi", parse("p")}, {"chi", parse("q")}},
            {lhs},
            rhs,
            p1q0 | p0q1,
            ""};
  }
  if (id == "example2-convex") {
    return {std::string(id),
            "convex distributivity fails for outer global disjunction",
            ctx,
            {{"phi", parse("p")}, {"psi", parse("q")}, {"chi", parse("bdia ~p")}},
            {parse("p"), parse("q ovv bdia ~p"), parse("bdia q")},
            parse("(p /\\ q) ovv (p /\\ bdia ~p)"),
            p1q1 | p1q0,
            "needs the ambient context (p,q): q ovv bdia ~p holds at the witness through the "
            "superteam that adds (p0,q0)"};
  }
  if (id == "ne-union") {
    const Team u = p1q0, v = p0q1;
    const Formula tuv = exact_team_formula(u | v, ctx);
    const Formula tu = exact_team_formula(u, ctx);
    const Formula tv = exact_team_formula(v, ctx);
    return {std::string(id),
            "distributivity fails with NE: the exact-team formula of {u,v} against those of u and v",
            ctx,
            {{"theta_uv", tuv}, {"theta_u", tu}, {"theta_v", tv}},
            {conj(tuv, Formula::binary(Kind::TensorOr, tu, tv))},
            Formula::binary(Kind::TensorOr, conj(tuv, tu), conj(tuv, tv)),
            u | v,
            "u=(p1,q0), v=(p0,q1); the conclusion is satisfied by no team"};
  }
  if (id == "thm3-intersection") {
    const Team s = p1q1 | p1q0, t = p1q1 | p0q1;
    const Formula ts = exact_team_formula(s, ctx);
    const Formula tt = exact_team_formula(t, ctx);
    const Formula tst = exact_team_formula(s & t, ctx);
    return {std::string(id),
            "intersection distributivity fails for tensor conjunction",
            ctx,
            {{"theta_S", ts}, {"theta_T", tt}, {"theta_SnT", tst}},
            {conj(tst, Formula::binary(Kind::TensorAnd, ts, tt))},
            Formula::binary(Kind::TensorAnd, conj(tst, ts), conj(tst, tt)),
            s & t,
            "S={(p1,q1),(p1,q0)}, T={(p1,q1),(p0,q1)}; the conclusion is satisfied by no team"};
  }
  throw UsageError("unknown counterexample id '" + std::string(id) + "'");
}

bool verify_bundle(const CounterexampleBundle& bundle) {
  const auto r = entails(bundle.premises, bundle.conclusion, bundle.context);
  return !r.holds && r.counterexample == bundle.witness;
}

}  // namespace teamwb
