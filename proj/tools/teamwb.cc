// Command-line front end of the team-semantics workbench.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "teamwb/closure.h"
#include "teamwb/errors.h"
#include "teamwb/harness.h"
#include "teamwb/pool.h"
#include "teamwb/report.h"
#include "teamwb/synthesis.h"

using namespace teamwb;

namespace {

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kCap = 3 };

struct Options {
  bool json = false;
  int cap = Context::kDefaultCap;
  std::string context;
  std::string team_file;
  std::string formula;
  std::vector<std::string> premises;
  std::string conclusion;
  std::string case_id;
  int vars = 2;
  int depth = 3;
  std::string connectives;
  std::string out;
  std::string conditional;
  std::string schema;
  std::string filter = "none";
  std::string property;
  std::string mode = "both-args";
  std::string characterization;
};

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Context context_of(const Options& o) {
  if (o.context.empty()) throw UsageError("--context is required");
  return Context::from_list(o.context, o.cap);
}

std::string rows_text(Team t, const Context& ctx) { return ctx.team_label(t); }

int run_eval(const Options& o) {
  const Context ctx = context_of(o);
  const Formula f = parse(o.formula);
  const Team t = read_team_file(o.team_file, ctx);
  const bool v = eval(f, t, ctx);
  if (o.json)
    print(eval_json(f, t, ctx, v));
  else
    std::cout << (v ? "true" : "false") << "\n";
  return v ? kOk : kFails;
}

int run_entail(const Options& o) {
  const Context ctx = context_of(o);
  std::vector<Formula> ps;
  for (const auto& p : o.premises) ps.push_back(parse(p));
  const Formula c = parse(o.conclusion);
  const auto r = entails(ps, c, ctx);
  if (o.json) {
    print(entailment_json(ps, c, ctx, r));
  } else if (r.holds) {
    std::cout << "holds\n";
  } else {
    std::cout << "fails\ncounterexample: " << rows_text(*r.counterexample, ctx) << "\n";
  }
  return r.holds ? kOk : kFails;
}

int run_closure(const Options& o) {
  const Context ctx = context_of(o);
  const auto r = closure_profile(parse(o.formula), ctx);
  if (o.json) {
    print(closure_json(r));
    return kOk;
  }
  std::cout << r.formula << "\n";
  for (const auto& [k, c] : r.results) {
    std::cout << "  " << property_name(k) << ": " << (c.holds ? "yes" : "no");
    if (!c.holds) {
      std::cout << "  witness";
      for (Team t : c.witness) std::cout << " " << ctx.team_label(t);
    }
    std::cout << "\n";
  }
  return kOk;
}

int run_denote(const Options& o) {
  const Context ctx = context_of(o);
  const Formula f = parse(o.formula);
  const auto p = denotation(f, ctx);
  if (o.json) {
    print(denotation_json(f, ctx, p));
    return kOk;
  }
  std::cout << p.count() << " teams\n";
  p.for_each([&](Team t) { std::cout << "  " << ctx.team_label(t) << "\n"; });
  return kOk;
}

int run_witness(const Options& o) {
  const auto b = named_counterexample(o.case_id);
  const bool ok = verify_bundle(b);
  if (o.json) {
    print(bundle_json(b, ok));
  } else {
    std::cout << b.id << ": " << b.description << "\n";
    for (const auto& p : b.premises) std::cout << "  premise    " << render(p) << "\n";
    std::cout << "  conclusion " << render(b.conclusion) << "\n";
    std::cout << "  witness    " << b.context.team_label(b.witness) << "\n";
    std::cout << "  verified   " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kOk : kFails;
}

int run_tables(const Options& o) {
  const auto rep = reproduce_tables({o.vars, o.depth});
  const Json j = table_json(rep);
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    if (!out) throw UsageError("cannot write '" + o.out + "'");
    out << j.dump(2) << "\n";
  }
  const bool all = rep.agreeing() == rep.formalizable();
  if (o.json) {
    if (o.out.empty()) print(j);
  } else {
    for (const auto& c : rep.cells) {
      std::cout << "table " << c.table << "  " << c.conditional << "  " << c.column << "  ["
                << c.expected << "]  " << c.verdict;
      if (c.verdict != "skipped") std::cout << (c.agrees ? "  agrees" : "  DISAGREES");
      std::cout << "\n";
    }
    std::cout << rep.agreeing() << "/" << rep.formalizable() << " formalizable cells agree, "
              << rep.skipped() << " skipped\n";
  }
  return all ? kOk : kFails;
}

int run_pool(const Options& o) {
  PoolSignature sig = PoolSignature::standard(standard_context(o.vars), o.depth);
  if (!o.connectives.empty()) sig.connectives = parse_connective_list(o.connectives);
  const Pool pool = enumerate_pool(sig);
  if (o.json) {
    print(pool_json(pool));
  } else {
    std::cout << "# " << sig.description() << "\n# " << pool.size() << " formulas\n";
    for (const auto& f : pool.formulas) std::cout << render(f) << "\n";
  }
  return kOk;
}

Kind conditional_of(const Options& o) {
  auto k = connective_from_id(o.conditional);
  if (!k) throw UsageError("unknown conditional '" + o.conditional + "'");
  require_conditional(*k);
  return *k;
}

Pool pool_of(const Options& o) {
  PoolSignature sig = PoolSignature::standard(standard_context(o.vars), o.depth);
  if (!o.connectives.empty()) sig.connectives = parse_connective_list(o.connectives);
  return enumerate_pool(sig);
}

int report_check(const Options& o, const CheckReport& r) {
  if (o.json) {
    Json j = check_json(r);
    j["format"] = kReportFormat;
    j["pool"] = r.pool;
    print(j);
  } else {
    std::cout << r.check << " for " << r.conditional << " (" << r.filter << "): " << r.verdict()
              << ", " << r.instances << " instances\n";
    if (r.counterexample) {
      const auto& ce = *r.counterexample;
      for (const auto& [role, f] : ce.instantiation) std::cout << "  " << role << " = " << f << "\n";
      std::cout << "  fails at " << ce.team_label << (ce.verified ? " (verified)" : "") << "\n";
    }
  }
  return r.refuted() ? kFails : kOk;
}

int run_schema(const Options& o) {
  auto k = schema_from_name(o.schema);
  if (!k) throw UsageError("unknown schema '" + o.schema + "'");
  std::optional<RoleFilter> filter;
  for (int i = 0; i <= static_cast<int>(RoleFilter::AllUpward); ++i)
    if (filter_name(static_cast<RoleFilter>(i)) == o.filter) filter = static_cast<RoleFilter>(i);
  if (!filter) throw UsageError("unknown filter '" + o.filter + "'");
  return report_check(o, check_inference_schema(*k, conditional_of(o), pool_of(o), *filter));
}

int run_preserve(const Options& o) {
  PropertySet target;
  std::size_t start = 0;
  while (start <= o.property.size()) {
    std::size_t end = o.property.find('+', start);
    if (end == std::string::npos) end = o.property.size();
    auto k = property_from_name(o.property.substr(start, end - start));
    if (!k) throw UsageError("unknown property '" + o.property.substr(start, end - start) + "'");
    target.insert(*k);
    start = end + 1;
  }
  std::optional<PreservationMode> mode;
  for (auto m : {PreservationMode::BothArgs, PreservationMode::ConsequentOnly,
                 PreservationMode::AntecedentOnly, PreservationMode::AllArgs})
    if (mode_name(m) == o.mode) mode = m;
  if (!mode) throw UsageError("unknown mode '" + o.mode + "'");
  return report_check(o, check_preservation(target, conditional_of(o), pool_of(o), {*mode, {}, false}));
}

int run_characterize(const Options& o) {
  auto id = characterization_from_name(o.characterization);
  if (!id) throw UsageError("unknown characterization '" + o.characterization + "'");
  const Pool pool = pool_of(o);
  const auto r = check_characterization_pool(pool.formulas, pool.signature.context, *id,
                                             pool.signature.description());
  if (o.json) {
    print(agreement_json(r));
  } else {
    std::cout << r.id << ": " << r.agreements << " agreements, " << r.disagreements.size()
              << " disagreements\n";
    for (const auto& d : r.disagreements) std::cout << "  " << d << "\n";
  }
  return r.ok() ? kOk : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Team-semantics workbench"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print machine-readable JSON");
  app.add_option("--cap", o.cap, "Largest context size accepted (at most 4)");

  auto* ev = app.add_subcommand("eval", "Evaluate a formula on a team");
  ev->add_option("--context", o.context, "Variables, e.g. p,q")->required();
  ev->add_option("--team", o.team_file, "Team file (JSON)")->required();
  ev->add_option("formula", o.formula)->required();

  auto* en = app.add_subcommand("entail", "Decide an entailment by enumeration");
  en->add_option("--context", o.context)->required();
  en->add_option("--premise", o.premises);
  en->add_option("--conclusion", o.conclusion)->required();

  auto* cl = app.add_subcommand("closure", "Closure profile of a formula");
  cl->add_option("--context", o.context)->required();
  cl->add_option("formula", o.formula)->required();

  auto* de = app.add_subcommand("denote", "List the teams satisfying a formula");
  de->add_option("--context", o.context)->required();
  de->add_option("formula", o.formula)->required();

  auto* wi = app.add_subcommand("witness", "Print a named counterexample bundle");
  wi->add_option("case", o.case_id)->required();

  auto* ta = app.add_subcommand("tables", "Reproduce the conditional property tables");
  ta->add_option("--vars", o.vars);
  ta->add_option("--depth", o.depth);
  ta->add_option("--out", o.out, "Write the JSON report here");

  auto* po = app.add_subcommand("pool", "List the deduplicated formula pool");
  po->add_option("--vars", o.vars);
  po->add_option("--depth", o.depth);
  po->add_option("--connectives", o.connectives, "Comma-separated connective ids");

  auto* sc = app.add_subcommand("schema", "Check an inference schema over the pool");
  sc->add_option("--conditional", o.conditional)->required();
  sc->add_option("--kind", o.schema)->required();
  sc->add_option("--filter", o.filter);
  sc->add_option("--vars", o.vars);
  sc->add_option("--depth", o.depth);
  sc->add_option("--connectives", o.connectives);

  auto* pr = app.add_subcommand("preserve", "Check closure-property preservation over the pool");
  pr->add_option("--conditional", o.conditional)->required();
  pr->add_option("--property", o.property, "e.g. upward or upward+intersection")->required();
  pr->add_option("--mode", o.mode);
  pr->add_option("--vars", o.vars);
  pr->add_option("--depth", o.depth);
  pr->add_option("--connectives", o.connectives);

  auto* ch = app.add_subcommand("characterize", "Cross-check a characterization over the pool");
  ch->add_option("id", o.characterization)->required();
  ch->add_option("--vars", o.vars);
  ch->add_option("--depth", o.depth);
  ch->add_option("--connectives", o.connectives);

  for (auto* s : app.get_subcommands([](const CLI::App*) { return true; }))
    s->add_flag("--json", o.json, "Print machine-readable JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*ev) return run_eval(o);
    if (*en) return run_entail(o);
    if (*cl) return run_closure(o);
    if (*de) return run_denote(o);
    if (*wi) return run_witness(o);
    if (*ta) return run_tables(o);
    if (*po) return run_pool(o);
    if (*sc) return run_schema(o);
    if (*pr) return run_preserve(o);
    if (*ch) return run_characterize(o);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
