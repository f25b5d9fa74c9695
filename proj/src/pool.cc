#include "teamwb/pool.h"

#include <algorithm>
#include <unordered_set>

#include "teamwb/errors.h"

namespace teamwb {

PoolSignature PoolSignature::standard(const Context& ctx, int depth) {
  return PoolSignature{ctx,
                       {Kind::Neg, Kind::And, Kind::TensorOr, Kind::GlobalOr, Kind::OuterGlobalOr,
                        Kind::TensorAnd, Kind::Nabla, Kind::BlackDia, Kind::NE, Kind::IntImp},
                       depth,
                       0,
                       2'000'000};
}

std::string PoolSignature::description() const {
  std::string s = "vars=";
  for (int i = 0; i < context.size(); ++i) s += (i ? "," : "") + context.vars()[i];
  s += " connectives=";
  for (std::size_t i = 0; i < connectives.size(); ++i)
    s += (i ? "," : "") + std::string(connective_meta(connectives[i]).id);
  s += " depth=" + std::to_string(max_depth);
  if (max_atoms > 0) s += " atoms=" + std::to_string(max_atoms);
  s += " dedup=denotation";
  return s;
}

std::vector<Kind> parse_connective_list(std::string_view list) {
  std::vector<Kind> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view item = list.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      auto k = connective_from_id(item);
      if (!k || *k == Kind::Atom)
        throw UsageError("unknown connective '" + std::string(item) + "'");
      if (std::find(out.begin(), out.end(), *k) == out.end()) out.push_back(*k);
    }
    start = end + 1;
  }
  return out;
}

namespace {

struct Candidate {
  Formula f;
  std::string text;
  TeamProposition p;
};

}  // namespace

Pool enumerate_pool(const PoolSignature& sig) {
  if (sig.max_depth < 1) throw UsageError("pool depth must be at least 1");
  const Context& ctx = sig.context;
  DenotationEngine engine(ctx);
  Pool pool{sig, {}, {}};
  std::unordered_set<TeamProposition, TeamPropositionHash> seen;
  std::vector<std::size_t> level_end;  // pool index after each depth level

  auto admit = [&](std::vector<Candidate>& cands) {
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.f.size() != b.f.size()) return a.f.size() < b.f.size();
      return a.text < b.text;
    });
    for (auto& c : cands) {
      if (!seen.insert(c.p).second) continue;
      pool.formulas.push_back(std::move(c.f));
      pool.denotations.push_back(std::move(c.p));
    }
    level_end.push_back(pool.formulas.size());
  };

  std::size_t generated = 0;
  auto count = [&](std::size_t more) {
    generated += more;
    if (generated > sig.cap)
      throw CapExceeded("pool enumeration would generate at least " + std::to_string(generated) +
                        " candidates, cap is " + std::to_string(sig.cap));
  };

  // Depth 1: atoms and nullary connectives.
  {
    std::vector<Candidate> cands;
    const int atoms = sig.max_atoms > 0 ? std::min(sig.max_atoms, ctx.size()) : ctx.size();
    auto add = [&](Formula f) {
      auto p = engine.leaf(f);
      cands.push_back({f, render(f), std::move(p)});
    };
    for (int i = 0; i < atoms; ++i) add(Formula::atom(ctx.vars()[i]));
    for (Kind k : sig.connectives) {
      if (k == Kind::Bot) add(Formula::bot());
      if (k == Kind::Top) add(Formula::top());
      if (k == Kind::NE) add(Formula::ne());
      if (k == Kind::Incl) {
        for (int i = 0; i < atoms; ++i)
          for (bool b : {false, true}) add(Formula::inclusion({b}, {ctx.vars()[i]}));
        for (int i = 0; i < atoms; ++i)
          for (int j = i + 1; j < atoms; ++j)
            for (int bits = 0; bits < 4; ++bits)
              add(Formula::inclusion({(bits & 2) != 0, (bits & 1) != 0},
                                     {ctx.vars()[i], ctx.vars()[j]}));
      }
    }
    count(cands.size());
    admit(cands);
  }

  for (int d = 2; d <= sig.max_depth; ++d) {
    const std::size_t prev_begin = level_end.size() >= 2 ? level_end[level_end.size() - 2] : 0;
    const std::size_t prev_end = level_end.back();
    std::vector<Candidate> cands;
    for (Kind k : sig.connectives) {
      const int arity = connective_meta(k).arity;
      if (arity == 1) {
        count(prev_end - prev_begin);
        for (std::size_t i = prev_begin; i < prev_end; ++i) {
          Formula f = Formula::unary(k, pool.formulas[i]);
          cands.push_back({f, render(f), engine.apply(k, pool.denotations[i])});
        }
      } else if (arity == 2) {
        // At least one argument from the previous level.
        count(prev_end * prev_end - prev_begin * prev_begin);
        for (std::size_t i = 0; i < prev_end; ++i)
          for (std::size_t j = 0; j < prev_end; ++j) {
            if (i < prev_begin && j < prev_begin) continue;
            Formula f = Formula::binary(k, pool.formulas[i], pool.formulas[j]);
            cands.push_back(
                {f, render(f), engine.apply(k, pool.denotations[i], pool.denotations[j])});
          }
      }
    }
    admit(cands);
  }
  return pool;
}

}  // namespace teamwb
