#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teamwb/pool.h"
#include "teamwb/property.h"
#include "teamwb/semantics.h"

namespace teamwb {

enum class SchemaKind {
  ModusPonens,               // φ, φ>ψ ⊨ ψ
  DeductionTheorem,          // Γ,φ ⊨ ψ  implies  Γ ⊨ φ>ψ   (|Γ| ≤ 1)
  IntroductionRule,          // φ ⊨ ψ  implies  ⊨ φ>ψ
  StrongTransitivity,        // φ>ψ, ψ>χ ⊨ φ>χ
  WeakTransitivity,          // ⊨ φ>ψ and ⊨ ψ>χ  imply  ⊨ φ>χ
  IntermediateTransitivity,  // ⊨ φ>ψ  implies  ψ>χ ⊨ φ>χ
  AntecedentStrengthening,   // φ>ψ ⊨ (φ∧χ)>ψ
  Importation,               // φ>(ψ>χ) ⊨ (φ∧ψ)>χ
  Exportation,               // (φ∧ψ)>χ ⊨ φ>(ψ>χ)
  Monotonicity,              // ψ ⊨ ψ'  implies  φ>ψ ⊨ φ>ψ'  and  ψ'>φ ⊨ ψ>φ
};

// Restricts schema instances by the closure properties of the pool formulas
// in a given role. "Consequent" is the formula on the right of the
// conditional in the conclusion of the schema.
enum class RoleFilter {
  None,
  AntecedentDownward,
  ContextDownward,
  ContextUpward,
  ConsequentDownward,
  ConsequentUpward,
  AntecedentAndContextDownward,
  AllDownward,
  AllUpward,
};

enum class PreservationMode {
  BothArgs,        // φ and ψ have the property
  ConsequentOnly,  // ψ has it
  AntecedentOnly,  // φ has it
  AllArgs,         // no requirement on the arguments
};

std::string_view schema_name(SchemaKind k);
std::optional<SchemaKind> schema_from_name(std::string_view name);
std::string_view filter_name(RoleFilter f);
std::string_view mode_name(PreservationMode m);

// A refuting instance together with the failing entailment and its witness
// team. `verified` is set once the entailment engine has confirmed it.
struct Counterexample {
  std::vector<std::pair<std::string, std::string>> instantiation;
  std::vector<std::string> premises;
  std::string conclusion;
  std::optional<Team> team;
  std::string team_label;
  std::string note;
  bool verified = false;
};

struct CheckReport {
  std::string check;  // schema name, property list, or "generalizes-intuitionistic"
  std::string conditional;
  std::string filter;
  std::string pool;
  std::size_t instances = 0;
  std::optional<Counterexample> counterexample;

  bool refuted() const { return counterexample.has_value(); }
  std::string verdict() const { return refuted() ? "refuted" : "consistent-bounded"; }
};

using SchemaReport = CheckReport;
using PreservationReport = CheckReport;

// Instances are scanned in lexicographic order of pool indices; the scan
// stops at the first counterexample, so `instances` counts the instances
// examined up to and including it.
SchemaReport check_inference_schema(SchemaKind k, Kind conditional, const Pool& pool,
                                    RoleFilter filter = RoleFilter::None);

struct PreservationOptions {
  PreservationMode mode = PreservationMode::BothArgs;
  // Properties demanded of the arguments; defaults to the target.
  std::optional<PropertySet> requirement;
  // Accept the empty team proposition even when it lacks the target.
  bool allow_empty = false;
};

PreservationReport check_preservation(PropertySet target, Kind conditional, const Pool& pool,
                                      PreservationOptions options = {});
inline PreservationReport check_preservation(ClosurePropertyKind p, Kind conditional,
                                             const Pool& pool,
                                             PreservationMode mode = PreservationMode::BothArgs) {
  return check_preservation(PropertySet{p}, conditional, pool, PreservationOptions{mode, {}, false});
}

// For every downward closed pool antecedent φ and every pool ψ, the
// conditional denotes the same proposition as φ -> ψ.
CheckReport check_generalizes(Kind conditional, const Pool& pool);

// Throws UsageError unless k is one of the ten conditionals.
void require_conditional(Kind k);

struct TableCheck {
  CheckReport report;
  bool expect_refuted = false;
  bool matches() const { return report.refuted() == expect_refuted; }
};

struct CellReport {
  int table = 0;  // 1 = inferential properties, 2 = closure properties
  std::string conditional;
  std::string column;
  std::string expected;   // the cell as printed
  std::string verdict;    // consistent-bounded, refuted or skipped
  bool agrees = false;    // every check matches the cell; false when skipped
  std::string filter;
  std::string reason;     // why a cell is skipped
  std::string interpretation;
  std::vector<TableCheck> checks;
  // Unfiltered variants of filtered cells; reported, never counted.
  std::vector<CheckReport> informational;
  std::size_t instances = 0;
  const Counterexample* counterexample() const;
};

struct TableConfig {
  int vars = 2;
  int depth = 3;
};

struct TableReport {
  std::string pool;
  std::size_t pool_size = 0;
  std::vector<CellReport> cells;

  std::size_t agreeing() const;
  std::size_t skipped() const;
  std::size_t formalizable() const;
};

TableReport reproduce_tables(const TableConfig& config = {});

// Variables p, q, r, s truncated to n.
Context standard_context(int n);

}  // namespace teamwb
