#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "teamwb/closure.h"
#include "teamwb/harness.h"
#include "teamwb/pool.h"
#include "teamwb/semantics.h"
#include "teamwb/synthesis.h"

namespace teamwb {

// JSON forms of the reports. Every top-level document carries "format": 1
// and has a deterministic key and element order.
using Json = nlohmann::ordered_json;

inline constexpr int kReportFormat = 1;

Json team_json(Team t, const Context& ctx);
Json context_json(const Context& ctx);
Json entailment_json(const std::vector<Formula>& premises, const Formula& conclusion,
                     const Context& ctx, const EntailmentResult& r);
Json eval_json(const Formula& f, Team t, const Context& ctx, bool value);
Json closure_json(const ClosureReport& r);
Json denotation_json(const Formula& f, const Context& ctx, const TeamProposition& p);
Json agreement_json(const AgreementReport& r);
Json bundle_json(const CounterexampleBundle& b, bool verified);
Json check_json(const CheckReport& r);
Json table_json(const TableReport& r);
Json pool_json(const Pool& pool);

// Team files: {"variables": ["p","q"], "rows": [[1,0],[0,1]]}. The
// variables must be the context's, in any order; duplicate rows are rejected.
Team read_team_json(const std::string& text, const Context& ctx);
Team read_team_file(const std::string& path, const Context& ctx);

}  // namespace teamwb
