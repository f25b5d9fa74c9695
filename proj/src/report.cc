#include "teamwb/report.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "teamwb/errors.h"

namespace teamwb {

Json team_json(Team t, const Context& ctx) {
  Json j;
  j["label"] = ctx.team_label(t);
  j["rows"] = ctx.team_rows(t);
  return j;
}

Json context_json(const Context& ctx) { return Json(ctx.vars()); }

namespace {

Json with_format(std::string_view kind) {
  Json j;
  j["format"] = kReportFormat;
  j["kind"] = kind;
  return j;
}

Json formula_list(const std::vector<Formula>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(render(f));
  return a;
}

Json counterexample_json(const Counterexample& ce) {
  Json j;
  Json inst = Json::object();
  for (const auto& [role, f] : ce.instantiation) inst[role] = f;
  j["instantiation"] = inst;
  j["premises"] = ce.premises;
  j["conclusion"] = ce.conclusion;
  j["team"] = ce.team_label;
  j["verified"] = ce.verified;
  if (!ce.note.empty()) j["note"] = ce.note;
  return j;
}

}  // namespace

Json entailment_json(const std::vector<Formula>& premises, const Formula& conclusion,
                     const Context& ctx, const EntailmentResult& r) {
  Json j = with_format("entailment");
  j["context"] = context_json(ctx);
  j["premises"] = formula_list(premises);
  j["conclusion"] = render(conclusion);
  j["holds"] = r.holds;
  j["counterexample"] = r.counterexample ? team_json(*r.counterexample, ctx) : Json(nullptr);
  return j;
}

Json eval_json(const Formula& f, Team t, const Context& ctx, bool value) {
  Json j = with_format("eval");
  j["context"] = context_json(ctx);
  j["formula"] = render(f);
  j["team"] = team_json(t, ctx);
  j["holds"] = value;
  return j;
}

Json closure_json(const ClosureReport& r) {
  Json j = with_format("closure");
  j["formula"] = r.formula;
  j["context"] = context_json(r.context);
  Json props = Json::array();
  for (const auto& [k, c] : r.results) {
    Json e;
    e["property"] = property_name(k);
    e["holds"] = c.holds;
    Json w = Json::array();
    for (Team t : c.witness) w.push_back(team_json(t, r.context));
    e["witness"] = c.holds ? Json(nullptr) : w;
    props.push_back(e);
  }
  j["properties"] = props;
  return j;
}

Json denotation_json(const Formula& f, const Context& ctx, const TeamProposition& p) {
  Json j = with_format("denotation");
  j["context"] = context_json(ctx);
  j["formula"] = render(f);
  j["count"] = p.count();
  Json teams = Json::array();
  p.for_each([&](Team t) { teams.push_back(ctx.team_rows(t)); });
  j["teams"] = teams;
  return j;
}

Json agreement_json(const AgreementReport& r) {
  Json j = with_format("agreement");
  j["id"] = r.id;
  j["pool"] = r.pool;
  j["agreements"] = r.agreements;
  j["disagreements"] = r.disagreements;
  return j;
}

Json bundle_json(const CounterexampleBundle& b, bool verified) {
  Json j = with_format("counterexample-bundle");
  j["id"] = b.id;
  j["description"] = b.description;
  j["context"] = context_json(b.context);
  Json fs = Json::object();
  for (const auto& [name, f] : b.formulas) fs[name] = render(f);
  j["formulas"] = fs;
  j["premises"] = formula_list(b.premises);
  j["conclusion"] = render(b.conclusion);
  j["holds"] = false;
  j["witness"] = team_json(b.witness, b.context);
  j["verified"] = verified;
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

Json check_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["conditional"] = r.conditional;
  j["filter"] = r.filter;
  j["verdict"] = r.verdict();
  j["instances"] = r.instances;
  j["counterexample"] = r.counterexample ? counterexample_json(*r.counterexample) : Json(nullptr);
  return j;
}

Json table_json(const TableReport& r) {
  Json j = with_format("tables");
  j["pool"] = r.pool;
  j["pool_size"] = r.pool_size;
  j["note"] = "consistent-bounded means no counterexample within the pool; it is not a proof";
  Json s;
  s["cells"] = r.cells.size();
  s["formalizable"] = r.formalizable();
  s["agreeing"] = r.agreeing();
  s["skipped"] = r.skipped();
  j["summary"] = s;
  Json rows = Json::array();
  for (const auto& c : r.cells) {
    Json e;
    e["table"] = c.table;
    e["conditional"] = c.conditional;
    e["column"] = c.column;
    e["expected"] = c.expected;
    e["verdict"] = c.verdict;
    e["agrees"] = c.agrees;
    e["filter"] = c.filter;
    e["instances"] = c.instances;
    const Counterexample* ce = c.counterexample();
    e["counterexample"] = ce ? counterexample_json(*ce) : Json(nullptr);
    if (!c.reason.empty()) e["reason"] = c.reason;
    if (!c.interpretation.empty()) e["interpretation"] = c.interpretation;
    Json checks = Json::array();
    for (const auto& t : c.checks) {
      Json cj = check_json(t.report);
      cj["expected"] = t.expect_refuted ? "refuted" : "consistent-bounded";
      checks.push_back(cj);
    }
    e["checks"] = checks;
    Json info = Json::array();
    for (const auto& t : c.informational) info.push_back(check_json(t));
    e["informational"] = info;
    rows.push_back(e);
  }
  j["rows"] = rows;
  return j;
}

Json pool_json(const Pool& pool) {
  Json j = with_format("pool");
  j["signature"] = pool.signature.description();
  j["size"] = pool.size();
  j["formulas"] = formula_list(pool.formulas);
  return j;
}

Team read_team_json(const std::string& text, const Context& ctx) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ContextError(std::string("team file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("variables") || !j.contains("rows") ||
      !j["variables"].is_array() || !j["rows"].is_array())
    throw ContextError("team file needs \"variables\" and \"rows\" arrays");
  std::vector<std::string> vars;
  for (const auto& v : j["variables"]) {
    if (!v.is_string()) throw ContextError("team file variables must be strings");
    vars.push_back(v.get<std::string>());
  }
  if (static_cast<int>(vars.size()) != ctx.size())
    throw ContextError("team file declares " + std::to_string(vars.size()) +
                       " variables, the context has " + std::to_string(ctx.size()));
  std::vector<int> where;
  for (const auto& v : vars) {
    auto idx = ctx.index_of(v);
    if (!idx) throw ContextError("team file variable '" + v + "' is not in the context");
    if (std::find(where.begin(), where.end(), *idx) != where.end())
      throw ContextError("duplicate variable '" + v + "' in team file");
    where.push_back(*idx);
  }
  std::vector<std::vector<int>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array() || row.size() != vars.size())
      throw ContextError("every team row needs " + std::to_string(vars.size()) + " entries");
    std::vector<int> aligned(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!row[i].is_number_integer()) throw ContextError("team rows must contain only 0 and 1");
      aligned[where[i]] = row[i].get<int>();
    }
    rows.push_back(std::move(aligned));
  }
  return ctx.team_from_rows(rows);
}

Team read_team_file(const std::string& path, const Context& ctx) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open team file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return read_team_json(ss.str(), ctx);
}

}  // namespace teamwb
