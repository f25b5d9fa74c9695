#include "teamwb/semantics.h"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "teamwb/errors.h"

namespace teamwb {

// ---------------------------------------------------------------------------
// Context

Context::Context(std::vector<std::string> vars, int cap) : vars_(std::move(vars)) {
  if (cap < 1 || cap > kHardCap)
    throw CapExceeded("context cap must lie in 1.." + std::to_string(kHardCap) + ", got " +
                      std::to_string(cap));
  if (vars_.empty()) throw ContextError("context must declare at least one variable");
  if (static_cast<int>(vars_.size()) > cap)
    throw CapExceeded("context has " + std::to_string(vars_.size()) +
                      " variables, cap is " + std::to_string(cap));
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!is_identifier(vars_[i]))
      throw ContextError("invalid variable name '" + vars_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) throw ContextError("duplicate variable '" + vars_[i] + "'");
  }
}

Context Context::from_list(std::string_view csv, int cap) {
  std::vector<std::string> vars;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view item = csv.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    vars.emplace_back(item);
    start = end + 1;
  }
  return Context(std::move(vars), cap);
}

std::optional<int> Context::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

Team Context::true_set(int var) const {
  Team t = 0;
  for (int v = 0; v < num_valuations(); ++v)
    if (value(v, var)) t |= Team{1} << v;
  return t;
}

std::string Context::valuation_label(int valuation) const {
  std::string s = "(";
  for (int k = 0; k < size(); ++k) {
    if (k) s += ',';
    s += vars_[k];
    s += value(valuation, k) ? '1' : '0';
  }
  return s + ")";
}

std::string Context::team_label(Team t) const {
  std::string s = "{";
  bool first = true;
  for (int v = 0; v < num_valuations(); ++v) {
    if (!((t >> v) & 1)) continue;
    if (!first) s += ',';
    first = false;
    s += valuation_label(v);
  }
  return s + "}";
}

std::vector<std::vector<int>> Context::team_rows(Team t) const {
  std::vector<std::vector<int>> rows;
  for (int v = 0; v < num_valuations(); ++v) {
    if (!((t >> v) & 1)) continue;
    std::vector<int> row;
    for (int k = 0; k < size(); ++k) row.push_back(value(v, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Team Context::team_from_rows(const std::vector<std::vector<int>>& rows) const {
  Team t = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != size())
      throw ContextError("team row has " + std::to_string(row.size()) + " entries, expected " +
                         std::to_string(size()));
    int v = 0;
    for (int bit : row) {
      if (bit != 0 && bit != 1) throw ContextError("team rows must contain only 0 and 1");
      v = (v << 1) | bit;
    }
    if ((t >> v) & 1) throw ContextError("duplicate team row " + valuation_label(v));
    t |= Team{1} << v;
  }
  return t;
}

void Context::require_covers(const Formula& f) const {
  for (const auto& v : free_variables(f))
    if (!index_of(v)) throw ContextError("variable '" + v + "' is not in the context");
}

// ---------------------------------------------------------------------------
// TeamProposition

TeamProposition::TeamProposition(const Context& ctx) : TeamProposition(ctx.num_teams(), false) {}

TeamProposition::TeamProposition(std::size_t num_teams, bool full)
    : n_(num_teams), words_((num_teams + 63) / 64, full ? ~std::uint64_t{0} : 0) {
  trim();
}

TeamProposition TeamProposition::from_teams(const Context& ctx, const std::vector<Team>& teams) {
  TeamProposition p(ctx);
  for (Team t : teams) p.insert(t);
  return p;
}

void TeamProposition::trim() {
  if (n_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

std::size_t TeamProposition::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool TeamProposition::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool TeamProposition::is_full() const { return count() == n_; }

bool TeamProposition::subset_of(const TeamProposition& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::optional<Team> TeamProposition::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<Team>(i * 64 + std::countr_zero(words_[i]));
  return std::nullopt;
}

std::optional<Team> TeamProposition::first_not_in(const TeamProposition& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t d = words_[i] & ~other.words_[i];
    if (d) return static_cast<Team>(i * 64 + std::countr_zero(d));
  }
  return std::nullopt;
}

std::vector<Team> TeamProposition::members() const {
  std::vector<Team> out;
  for_each([&](Team t) { out.push_back(t); });
  return out;
}

TeamProposition& TeamProposition::operator&=(const TeamProposition& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

TeamProposition& TeamProposition::operator|=(const TeamProposition& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

TeamProposition& TeamProposition::subtract(const TeamProposition& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

TeamProposition TeamProposition::complement() const {
  TeamProposition r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

std::size_t TeamProposition::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Set transformers

namespace {

int universe_bits(std::size_t num_teams) { return std::countr_zero(num_teams); }

std::vector<std::uint8_t> to_bytes(const TeamProposition& p) {
  std::vector<std::uint8_t> b(p.universe(), 0);
  p.for_each([&](Team t) { b[t] = 1; });
  return b;
}

TeamProposition from_bytes(const std::vector<std::uint8_t>& b) {
  TeamProposition p(b.size(), false);
  for (std::size_t t = 0; t < b.size(); ++t)
    if (b[t]) p.insert(static_cast<Team>(t));
  return p;
}

bool is_global(Kind k) {
  return connective_meta(k).quantification == Quantification::GlobalQuantified;
}

}  // namespace

namespace ops {

TeamProposition up_closure(const TeamProposition& p) {
  auto b = to_bytes(p);
  const int m = universe_bits(p.universe());
  for (int i = 0; i < m; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t t = 0; t < b.size(); ++t)
      if (!(t & bit)) b[t | bit] |= b[t];
  }
  return from_bytes(b);
}

TeamProposition down_closure(const TeamProposition& p) {
  auto b = to_bytes(p);
  const int m = universe_bits(p.universe());
  for (int i = 0; i < m; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t t = 0; t < b.size(); ++t)
      if (t & bit) b[t ^ bit] |= b[t];
  }
  return from_bytes(b);
}

TeamProposition down_core(const TeamProposition& p) {
  return up_closure(p.complement()).complement();
}

TeamProposition union_product(const TeamProposition& a, const TeamProposition& b) {
  const std::size_t n = a.universe();
  const int m = universe_bits(n);
  std::vector<std::int64_t> fa(n, 0), fb(n, 0);
  a.for_each([&](Team t) { fa[t] = 1; });
  b.for_each([&](Team t) { fb[t] = 1; });
  // Subset sums: f(S) = number of members contained in S.
  for (int i = 0; i < m; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t t = 0; t < n; ++t)
      if (t & bit) {
        fa[t] += fa[t ^ bit];
        fb[t] += fb[t ^ bit];
      }
  }
  for (std::size_t t = 0; t < n; ++t) fa[t] *= fb[t];
  // Moebius inversion yields the number of pairs whose union is exactly S.
  for (int i = 0; i < m; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t t = 0; t < n; ++t)
      if (t & bit) fa[t] -= fa[t ^ bit];
  }
  TeamProposition r(n, false);
  for (std::size_t t = 0; t < n; ++t)
    if (fa[t] > 0) r.insert(static_cast<Team>(t));
  return r;
}

TeamProposition complement_teams(const TeamProposition& p) {
  TeamProposition r(p.universe(), false);
  const Team full = static_cast<Team>(p.universe() - 1);
  p.for_each([&](Team t) { r.insert(full ^ t); });
  return r;
}

TeamProposition intersection_product(const TeamProposition& a, const TeamProposition& b) {
  return complement_teams(union_product(complement_teams(a), complement_teams(b)));
}

TeamProposition powerset(std::size_t num_teams, Team w) {
  TeamProposition r(num_teams, false);
  for (Team s = w;; s = (s - 1) & w) {
    r.insert(s);
    if (s == 0) break;
  }
  return r;
}

}  // namespace ops

namespace {

// T satisfies max-> iff every maximal member of a below T is in b.
TeamProposition maximal_implication(const TeamProposition& a, const TeamProposition& b) {
  const std::size_t n = a.universe();
  TeamProposition r(n, false);
  std::vector<Team> subs;
  std::vector<std::uint8_t> in_a;
  std::vector<std::uint32_t> above;
  for (std::size_t tt = 0; tt < n; ++tt) {
    const Team t = static_cast<Team>(tt);
    // Submasks of t in ascending order; index x corresponds to the x-th one.
    subs.clear();
    for (Team s = 0;; s = (s - t) & t) {
      subs.push_back(s);
      if (s == t) break;
    }
    const std::size_t k = subs.size();
    in_a.assign(k, 0);
    above.assign(k, 0);
    bool any_bad = false;
    for (std::size_t x = 0; x < k; ++x) {
      in_a[x] = a.contains(subs[x]);
      above[x] = in_a[x];
      if (in_a[x] && !b.contains(subs[x])) any_bad = true;
    }
    if (!any_bad) {
      r.insert(t);
      continue;
    }
    const int bits = std::countr_zero(k);
    for (int i = 0; i < bits; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      for (std::size_t x = 0; x < k; ++x)
        if (!(x & bit)) above[x] += above[x | bit];
    }
    bool ok = true;
    for (std::size_t x = 0; x < k && ok; ++x)
      if (in_a[x] && above[x] == 1 && !b.contains(subs[x])) ok = false;
    if (ok) r.insert(t);
  }
  return r;
}

constexpr std::uint64_t kBitMasks[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

// result[T] = AND over s in a of b[combine(T, s)], where combine is union
// (linear implication) or intersection (relevant implication). Works on whole
// 64-bit words: the low six bits of a team index address bits inside a word.
TeamProposition forced_combination(const TeamProposition& a, const TeamProposition& b,
                                   bool use_union) {
  const std::size_t n = a.universe();
  const int m = universe_bits(n);
  const int low = std::min(m, 6);
  const Team low_mask = static_cast<Team>((1u << low) - 1);
  const auto& src = b.words();
  TeamProposition r(n, true);
  auto& dst = r.mutable_words();
  a.for_each([&](Team s) {
    const Team s_lo = s & low_mask;
    const std::size_t s_hi = s >> low;
    for (std::size_t h = 0; h < dst.size(); ++h) {
      std::uint64_t x = src[use_union ? (h | s_hi) : (h & s_hi)];
      for (int i = 0; i < low; ++i) {
        const bool in_s = (s_lo >> i) & 1;
        const int shift = 1 << i;
        if (use_union && in_s) {
          x &= kBitMasks[i];
          x |= x >> shift;
        } else if (!use_union && !in_s) {
          x &= ~kBitMasks[i];
          x |= x << shift;
        }
      }
      dst[h] &= x;
    }
  });
  if (n % 64 != 0) dst.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// DenotationEngine

DenotationEngine::DenotationEngine(const Context& ctx) : ctx_(ctx) {}

TeamProposition DenotationEngine::leaf(const Formula& f) const {
  const std::size_t n = ctx_.num_teams();
  switch (f.kind()) {
    case Kind::Atom: {
      const auto idx = ctx_.index_of(f.name());
      if (!idx) throw ContextError("variable '" + f.name() + "' is not in the context");
      return ops::powerset(n, ctx_.true_set(*idx));
    }
    case Kind::Bot:
      return ops::powerset(n, 0);
    case Kind::Top:
      return TeamProposition(n, true);
    case Kind::NE: {
      TeamProposition p(n, true);
      p.erase(0);
      return p;
    }
    case Kind::Incl: {
      Team match = ctx_.full_team();
      for (std::size_t i = 0; i < f.vars().size(); ++i) {
        const auto idx = ctx_.index_of(f.vars()[i]);
        if (!idx) throw ContextError("variable '" + f.vars()[i] + "' is not in the context");
        const Team ts = ctx_.true_set(*idx);
        match &= f.bits()[i] ? ts : (ctx_.full_team() & ~ts);
      }
      // Teams meeting the matching valuations.
      return ops::powerset(n, ctx_.full_team() & ~match).complement();
    }
    default:
      throw Error("not a leaf formula");
  }
}

TeamProposition DenotationEngine::apply(Kind kind, const TeamProposition& a) const {
  const std::size_t n = a.universe();
  switch (kind) {
    case Kind::Neg: {
      Team w = 0;
      for (int v = 0; v < ctx_.num_valuations(); ++v)
        if (!a.contains(Team{1} << v)) w |= Team{1} << v;
      return ops::powerset(n, w);
    }
    case Kind::Nabla: {
      TeamProposition ne = a;
      ne.erase(0);
      TeamProposition r = ops::up_closure(ne);
      r.insert(0);
      return r;
    }
    case Kind::BlackDia: {
      TeamProposition ne = a;
      ne.erase(0);
      return ops::up_closure(ne);
    }
    case Kind::Dia:
      return ops::up_closure(a);
    default:
      throw Error("not a unary connective");
  }
}

TeamProposition DenotationEngine::apply(Kind kind, const TeamProposition& a,
                                        const TeamProposition& b) const {
  const std::size_t n = a.universe();
  switch (kind) {
    case Kind::And:
      return a & b;
    case Kind::GlobalOr:
      return a | b;
    case Kind::TensorOr:
      return ops::union_product(a, b);
    case Kind::OuterGlobalOr:
      return ops::down_closure(a | b);
    case Kind::TensorAnd:
      return ops::intersection_product(a, b);
    case Kind::IntImp:
      return ops::up_closure(a - b).complement();
    case Kind::UpImp:
      return ops::down_closure(a - b).complement();
    case Kind::MaxImp:
      return maximal_implication(a, b);
    case Kind::MinImp:
      return ops::complement_teams(
          maximal_implication(ops::complement_teams(a), ops::complement_teams(b)));
    case Kind::LinImp:
      return forced_combination(a, b, true);
    case Kind::RelImp:
      return forced_combination(a, b, false);
    case Kind::EpIndic:
      return ops::down_core(a).complement() | b;
    case Kind::EpCf:
      return ops::up_closure(ops::down_core(a) - b).complement();
    case Kind::EpCond:
      return ops::down_core(a).complement() | ops::down_core(b);
    case Kind::Entail:
      return TeamProposition(n, a.subset_of(b));
    default:
      throw Error("not a binary connective");
  }
}

TeamProposition DenotationEngine::denote(const Formula& f) {
  std::unordered_map<const void*, TeamProposition> cache;
  auto rec = [&](auto&& self, const Formula& g) -> TeamProposition {
    if (auto it = cache.find(g.id()); it != cache.end()) return it->second;
    TeamProposition r = g.arity() == 0   ? leaf(g)
                        : g.arity() == 1 ? apply(g.kind(), self(self, g.child(0)))
                                         : apply(g.kind(), self(self, g.lhs()), self(self, g.rhs()));
    cache.emplace(g.id(), r);
    return r;
  };
  return rec(rec, f);
}

// ---------------------------------------------------------------------------
// RecursiveEvaluator

struct RecursiveEvaluator::Impl {
  explicit Impl(const Context& c) : ctx(c), full(c.full_team()) {}

  struct Entry {
    Formula keep;  // keeps the node alive so its address stays unique
    std::vector<std::int8_t> memo;
  };

  Context ctx;
  Team full;
  std::unordered_map<const void*, Entry> table;

  std::vector<std::int8_t>& memo_for(const Formula& f) {
    auto it = table.find(f.id());
    if (it == table.end())
      it = table.emplace(f.id(), Entry{f, std::vector<std::int8_t>(ctx.num_teams(), -1)}).first;
    return it->second.memo;
  }

  // Calls body on every subteam of t until it returns true.
  template <typename F>
  static bool any_subteam(Team t, F&& body) {
    for (Team s = t;; s = (s - 1) & t) {
      if (body(s)) return true;
      if (s == 0) return false;
    }
  }
  template <typename F>
  bool any_superteam(Team t, F&& body) const {
    const Team rest = full & ~t;
    return any_subteam(rest, [&](Team x) { return body(t | x); });
  }
  template <typename F>
  bool any_team(F&& body) const {
    return any_subteam(full, body);
  }

  bool eval(const Formula& f, Team t) {
    auto& memo = memo_for(f);
    if (memo[t] >= 0) return memo[t];
    const bool r = compute(f, t);
    memo[t] = r;
    return r;
  }

  bool compute(const Formula& f, Team t) {
    switch (f.kind()) {
      case Kind::Atom: {
        const auto idx = ctx.index_of(f.name());
        if (!idx) throw ContextError("variable '" + f.name() + "' is not in the context");
        return (t & ~ctx.true_set(*idx)) == 0;
      }
      case Kind::Bot:
        return t == 0;
      case Kind::Top:
        return true;
      case Kind::NE:
        return t != 0;
      case Kind::Incl: {
        for (int v = 0; v < ctx.num_valuations(); ++v) {
          if (!((t >> v) & 1)) continue;
          bool match = true;
          for (std::size_t i = 0; i < f.vars().size() && match; ++i) {
            const auto idx = ctx.index_of(f.vars()[i]);
            if (!idx) throw ContextError("variable '" + f.vars()[i] + "' is not in the context");
            match = ctx.value(v, *idx) == f.bits()[i];
          }
          if (match) return true;
        }
        return false;
      }
      case Kind::Neg:
        for (int v = 0; v < ctx.num_valuations(); ++v)
          if (((t >> v) & 1) && eval(f.child(0), Team{1} << v)) return false;
        return true;
      case Kind::Nabla:
        return t == 0 || any_subteam(t, [&](Team s) { return s != 0 && eval(f.child(0), s); });
      case Kind::BlackDia:
        return any_subteam(t, [&](Team s) { return s != 0 && eval(f.child(0), s); });
      case Kind::Dia:
        return any_subteam(t, [&](Team s) { return eval(f.child(0), s); });
      case Kind::And:
        return eval(f.lhs(), t) && eval(f.rhs(), t);
      case Kind::GlobalOr:
        return eval(f.lhs(), t) || eval(f.rhs(), t);
      case Kind::TensorOr:
        return any_subteam(t, [&](Team t1) {
          if (!eval(f.lhs(), t1)) return false;
          const Team need = t & ~t1;
          return any_subteam(t1, [&](Team extra) { return eval(f.rhs(), need | extra); });
        });
      case Kind::OuterGlobalOr:
        return any_superteam(t, [&](Team s) { return eval(f.lhs(), s) || eval(f.rhs(), s); });
      case Kind::TensorAnd: {
        const Team rest = full & ~t;
        return any_subteam(rest, [&](Team x) {
          if (!eval(f.lhs(), t | x)) return false;
          return any_subteam(rest & ~x, [&](Team y) { return eval(f.rhs(), t | y); });
        });
      }
      case Kind::IntImp:
        return !any_subteam(t, [&](Team s) { return eval(f.lhs(), s) && !eval(f.rhs(), s); });
      case Kind::UpImp:
        return !any_superteam(t, [&](Team s) { return eval(f.lhs(), s) && !eval(f.rhs(), s); });
      case Kind::MaxImp:
        return !any_subteam(t, [&](Team s) {
          if (!eval(f.lhs(), s) || eval(f.rhs(), s)) return false;
          const bool larger = any_subteam(t & ~s, [&](Team x) {
            return x != 0 && eval(f.lhs(), s | x);
          });
          return !larger;
        });
      case Kind::MinImp:
        return !any_superteam(t, [&](Team s) {
          if (!eval(f.lhs(), s) || eval(f.rhs(), s)) return false;
          const bool smaller = any_subteam(s & ~t, [&](Team x) {
            return x != 0 && eval(f.lhs(), s & ~x);
          });
          return !smaller;
        });
      case Kind::LinImp:
        return !any_team([&](Team s) { return eval(f.lhs(), s) && !eval(f.rhs(), s | t); });
      case Kind::RelImp:
        return !any_team([&](Team s) { return eval(f.lhs(), s) && !eval(f.rhs(), s & t); });
      case Kind::EpIndic:
        return !all_below(f.lhs(), t) || eval(f.rhs(), t);
      case Kind::EpCf:
        return !any_subteam(t, [&](Team s) { return all_below(f.lhs(), s) && !eval(f.rhs(), s); });
      case Kind::EpCond:
        return !all_below(f.lhs(), t) || all_below(f.rhs(), t);
      case Kind::Entail:
        return !any_team([&](Team s) { return eval(f.lhs(), s) && !eval(f.rhs(), s); });
    }
    return false;
  }

  bool all_below(const Formula& g, Team t) {
    return !any_subteam(t, [&](Team s) { return !eval(g, s); });
  }
};

RecursiveEvaluator::RecursiveEvaluator(const Context& ctx) : impl_(new Impl(ctx)) {}
RecursiveEvaluator::~RecursiveEvaluator() { delete impl_; }

bool RecursiveEvaluator::eval(const Formula& f, Team t) {
  if (t > impl_->full) throw ContextError("team is not over the context");
  return impl_->eval(f, t);
}

// ---------------------------------------------------------------------------
// Facade

bool uses_global_quantification(const Formula& f) {
  if (is_global(f.kind())) return true;
  for (int i = 0; i < f.arity(); ++i)
    if (uses_global_quantification(f.child(i))) return true;
  return false;
}

namespace {

// At four variables naive recursion through global quantifiers (or over every
// team of the context) is too slow; the denotation engine is used instead.
bool prefer_denotation(const Context& ctx, const Formula& f) {
  return ctx.size() >= Context::kHardCap && uses_global_quantification(f);
}

}  // namespace

bool eval(const Formula& f, Team t, const Context& ctx) {
  ctx.require_covers(f);
  if (t > ctx.full_team()) throw ContextError("team is not over the context");
  if (prefer_denotation(ctx, f)) return DenotationEngine(ctx).denote(f).contains(t);
  RecursiveEvaluator ev(ctx);
  return ev.eval(f, t);
}

TeamProposition denotation(const Formula& f, const Context& ctx) {
  ctx.require_covers(f);
  return DenotationEngine(ctx).denote(f);
}

EntailmentResult entails(const std::vector<Formula>& premises, const Formula& conclusion,
                         const Context& ctx) {
  for (const auto& p : premises) ctx.require_covers(p);
  ctx.require_covers(conclusion);
  EntailmentResult result;
  if (ctx.size() >= Context::kHardCap) {
    DenotationEngine engine(ctx);
    TeamProposition sat(ctx.num_teams(), true);
    for (const auto& p : premises) sat &= engine.denote(p);
    if (auto t = sat.first_not_in(engine.denote(conclusion))) {
      result.holds = false;
      result.counterexample = *t;
    }
    return result;
  }
  RecursiveEvaluator ev(ctx);
  for (std::size_t tt = 0; tt < ctx.num_teams(); ++tt) {
    const Team t = static_cast<Team>(tt);
    bool all = true;
    for (const auto& p : premises)
      if (!ev.eval(p, t)) {
        all = false;
        break;
      }
    if (all && !ev.eval(conclusion, t)) {
      result.holds = false;
      result.counterexample = t;
      return result;
    }
  }
  return result;
}

Team restrict_team(Team t, const Context& ctx, const Context& sub) {
  std::vector<int> where;
  for (const auto& v : sub.vars()) {
    const auto idx = ctx.index_of(v);
    if (!idx) throw ContextError("variable '" + v + "' of the target context is not in the source");
    where.push_back(*idx);
  }
  Team r = 0;
  for (int v = 0; v < ctx.num_valuations(); ++v) {
    if (!((t >> v) & 1)) continue;
    int w = 0;
    for (int idx : where) w = (w << 1) | static_cast<int>(ctx.value(v, idx));
    r |= Team{1} << w;
  }
  return r;
}

}  // namespace teamwb
