#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "teamwb/property.h"
#include "teamwb/semantics.h"

namespace teamwb {

// Outcome of one closure test. On failure the witness lists teams in a fixed
// layout per property:
//   empty-team   [∅]
//   downward     [T, S]     T ∈ P, S ⊆ T, S ∉ P
//   upward       [T, S]     T ∈ P, S ⊇ T, S ∉ P
//   union        [S, T, S∪T]
//   intersection [S, T, S∩T]
//   convex       [S, R, T]  S ⊆ R ⊆ T, S,T ∈ P, R ∉ P
//   flat         [T]        T ∈ P differs from "all singletons of T in P"
struct PropertyCheck {
  bool holds = true;
  std::vector<Team> witness;
};

PropertyCheck has_property(const TeamProposition& p, ClosurePropertyKind kind);
// Membership test only, without witness search.
bool satisfies(const TeamProposition& p, ClosurePropertyKind kind);
PropertySet properties_of(const TeamProposition& p);
// True when the witness really violates the property in p.
bool witness_violates(const TeamProposition& p, ClosurePropertyKind kind,
                      const std::vector<Team>& witness);

struct ClosureReport {
  std::string formula;
  Context context;
  std::vector<std::pair<ClosurePropertyKind, PropertyCheck>> results;

  const PropertyCheck& at(ClosurePropertyKind kind) const;
};

ClosureReport closure_profile(const Formula& f, const Context& ctx);

// The entailment that characterizes a property, decided by the entailment
// engine rather than by the set-level test above:
//   empty-team   bot ⊨ f            downward  f ovv f ⊨ f
//   upward       dia f ⊨ f          union     f \/ f ⊨ f
//   intersection f tand f ⊨ f       convex    dia f, f ovv f ⊨ f
//   flat         the empty-team, downward and union entailments together
bool property_by_entailment(const Formula& f, const Context& ctx, ClosurePropertyKind kind);

struct Sequent {
  std::vector<Formula> premises;
  Formula conclusion;
};
// The entailments listed above; three of them for flat, one otherwise.
std::vector<Sequent> property_entailments(const Formula& f, ClosurePropertyKind kind);

enum class Characterization {
  UnionIdem,
  IntersectionIdem,
  ConvexDia,
  ConvexBdiaForward,
  DownwardDistr,
  UnionConvDistr,
};

inline constexpr std::array<Characterization, 6> kAllCharacterizations = {
    Characterization::UnionIdem,       Characterization::IntersectionIdem,
    Characterization::ConvexDia,       Characterization::ConvexBdiaForward,
    Characterization::DownwardDistr,   Characterization::UnionConvDistr,
};

std::string_view characterization_name(Characterization c);
std::optional<Characterization> characterization_from_name(std::string_view name);

struct AgreementReport {
  std::string id;
  std::string pool;
  std::size_t agreements = 0;
  std::vector<std::string> disagreements;

  bool ok() const { return disagreements.empty(); }
};

// Compares the closure test with the characterizing entailment for f. The
// distributivity ids quantify over the (ψ, χ) pairs drawn from `pool`.
AgreementReport check_characterization(const Formula& f, const Context& ctx, Characterization id,
                                       const std::vector<Formula>& pool = {});

// Runs the check for every pool member.
AgreementReport check_characterization_pool(const std::vector<Formula>& pool, const Context& ctx,
                                            Characterization id, std::string pool_description);

}  // namespace teamwb
