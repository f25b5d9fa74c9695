#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teamwb/semantics.h"

namespace teamwb {

// Classical formula satisfied exactly by the subteams of t: a tensor
// disjunction over the members of t (ascending) of the conjunction of their
// literals (context order). The empty team gives bot.
Formula flat_formula_for_team(Team t, const Context& ctx);

// Formula satisfied by t alone: like flat_formula_for_team with NE added to
// every disjunct. The empty team gives bot.
Formula exact_team_formula(Team t, const Context& ctx);

struct DistributivityWitness {
  Formula psi;
  Formula chi;
  Team team;
};

// For f not downward closed: take the first T ∈ ⟦f⟧ with a subteam S ∉ ⟦f⟧
// (first S in ascending order) and return α_S, α_{T∖S} and T, so that
// f ∧ (ψ ∨ χ) ⊭ (f ∧ ψ) ∨ (f ∧ χ) fails at T. Nothing for downward closed f.
std::optional<DistributivityWitness> distributivity_witnesses(const Formula& f, const Context& ctx);

struct CounterexampleBundle {
  std::string id;
  std::string description;
  Context context;
  std::vector<std::pair<std::string, Formula>> formulas;  // named ingredients
  std::vector<Formula> premises;
  Formula conclusion;
  Team witness;
  std::string note;
};

const std::vector<std::string>& counterexample_ids();
// Throws UsageError for an unknown id.
CounterexampleBundle named_counterexample(std::string_view id);
// Re-runs the entailment check; true when it fails exactly at the stored witness.
bool verify_bundle(const CounterexampleBundle& bundle);

}  // namespace teamwb
