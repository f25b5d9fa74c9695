#include "teamwb/closure.h"

#include "small_algebra.h"
#include "teamwb/errors.h"
#include "teamwb/synthesis.h"

namespace teamwb {

namespace {

using PK = ClosurePropertyKind;

Team full_of(const TeamProposition& p) { return static_cast<Team>(p.universe() - 1); }

// Calls body on the subteams of t in ascending order until it returns true.
template <typename F>
std::optional<Team> first_subteam(Team t, F&& body) {
  for (Team s = 0;; s = (s - t) & t) {
    if (body(s)) return s;
    if (s == t) return std::nullopt;
  }
}

template <typename F>
std::optional<Team> first_superteam(Team t, Team full, F&& body) {
  const Team rest = full & ~t;
  auto x = first_subteam(rest, [&](Team y) { return body(t | y); });
  if (!x) return std::nullopt;
  return t | *x;
}

Team flat_support(const TeamProposition& p) {
  Team w = 0;
  for (Team v = 0; (Team{1} << v) < p.universe(); ++v)
    if (p.contains(Team{1} << v)) w |= Team{1} << v;
  return w;
}

}  // namespace

bool satisfies(const TeamProposition& p, ClosurePropertyKind kind) {
  switch (kind) {
    case PK::EmptyTeam:
      return p.contains(0);
    case PK::Downward:
      return ops::down_closure(p).subset_of(p);
    case PK::Upward:
      return ops::up_closure(p).subset_of(p);
    case PK::UnionClosed:
      return ops::union_product(p, p).subset_of(p);
    case PK::IntersectionClosed:
      return ops::intersection_product(p, p).subset_of(p);
    case PK::Convex:
      return (ops::up_closure(p) & ops::down_closure(p)).subset_of(p);
    case PK::Flat:
      return p == ops::powerset(p.universe(), flat_support(p));
  }
  return false;
}

PropertySet properties_of(const TeamProposition& p) {
  PropertySet s;
  for (auto k : kAllClosureProperties)
    if (satisfies(p, k)) s.insert(k);
  return s;
}

PropertyCheck has_property(const TeamProposition& p, ClosurePropertyKind kind) {
  PropertyCheck r;
  const Team full = full_of(p);
  switch (kind) {
    case PK::EmptyTeam:
      if (!p.contains(0)) r.witness = {0};
      break;
    case PK::Downward:
      if (auto t = (p & ops::up_closure(p.complement())).first()) {
        const Team s = *first_subteam(*t, [&](Team x) { return !p.contains(x); });
        r.witness = {*t, s};
      }
      break;
    case PK::Upward:
      if (auto t = (p & ops::down_closure(p.complement())).first()) {
        const Team s = *first_superteam(*t, full, [&](Team x) { return !p.contains(x); });
        r.witness = {*t, s};
      }
      break;
    case PK::UnionClosed:
      if (auto u = ops::union_product(p, p).first_not_in(p)) {
        Team t_found = 0;
        const Team s = *first_subteam(*u, [&](Team s) {
          if (!p.contains(s)) return false;
          auto t = first_subteam(s, [&](Team x) { return p.contains((*u & ~s) | x); });
          if (t) t_found = (*u & ~s) | *t;
          return t.has_value();
        });
        r.witness = {s, t_found, *u};
      }
      break;
    case PK::IntersectionClosed:
      if (auto u = ops::intersection_product(p, p).first_not_in(p)) {
        Team t_found = 0;
        const Team s = *first_superteam(*u, full, [&](Team s) {
          if (!p.contains(s)) return false;
          auto t = first_subteam(full & ~s, [&](Team x) { return p.contains(*u | x); });
          if (t) t_found = *u | *t;
          return t.has_value();
        });
        r.witness = {s, t_found, *u};
      }
      break;
    case PK::Convex:
      if (auto mid = (ops::up_closure(p) & ops::down_closure(p)).first_not_in(p)) {
        const Team s = *first_subteam(*mid, [&](Team x) { return p.contains(x); });
        const Team t = *first_superteam(*mid, full, [&](Team x) { return p.contains(x); });
        r.witness = {s, *mid, t};
      }
      break;
    case PK::Flat: {
      const auto flat = ops::powerset(p.universe(), flat_support(p));
      const auto diff = (p - flat) | (flat - p);
      if (auto t = diff.first()) r.witness = {*t};
      break;
    }
  }
  r.holds = r.witness.empty();
  return r;
}

bool witness_violates(const TeamProposition& p, ClosurePropertyKind kind,
                      const std::vector<Team>& w) {
  auto sub = [](Team a, Team b) { return (a & ~b) == 0; };
  switch (kind) {
    case PK::EmptyTeam:
      return w.size() == 1 && w[0] == 0 && !p.contains(0);
    case PK::Downward:
      return w.size() == 2 && p.contains(w[0]) && sub(w[1], w[0]) && !p.contains(w[1]);
    case PK::Upward:
      return w.size() == 2 && p.contains(w[0]) && sub(w[0], w[1]) && !p.contains(w[1]);
    case PK::UnionClosed:
      return w.size() == 3 && p.contains(w[0]) && p.contains(w[1]) && (w[0] | w[1]) == w[2] &&
             !p.contains(w[2]);
    case PK::IntersectionClosed:
      return w.size() == 3 && p.contains(w[0]) && p.contains(w[1]) && (w[0] & w[1]) == w[2] &&
             !p.contains(w[2]);
    case PK::Convex:
      return w.size() == 3 && p.contains(w[0]) && p.contains(w[2]) && sub(w[0], w[1]) &&
             sub(w[1], w[2]) && !p.contains(w[1]);
    case PK::Flat: {
      if (w.size() != 1) return false;
      bool singletons = true;
      for (Team x = w[0]; x != 0; x &= x - 1)
        singletons = singletons && p.contains(x & (~x + 1));
      return p.contains(w[0]) != singletons;
    }
  }
  return false;
}

const PropertyCheck& ClosureReport::at(ClosurePropertyKind kind) const {
  for (const auto& [k, c] : results)
    if (k == kind) return c;
  throw Error("property missing from report");
}

ClosureReport closure_profile(const Formula& f, const Context& ctx) {
  const auto p = denotation(f, ctx);
  ClosureReport r{render(f), ctx, {}};
  for (auto k : kAllClosureProperties) r.results.emplace_back(k, has_property(p, k));
  return r;
}

std::vector<Sequent> property_entailments(const Formula& f, ClosurePropertyKind kind) {
  auto bin = [&](Kind k) { return Formula::binary(k, f, f); };
  switch (kind) {
    case PK::EmptyTeam:
      return {{{Formula::bot()}, f}};
    case PK::Downward:
      return {{{bin(Kind::OuterGlobalOr)}, f}};
    case PK::Upward:
      return {{{Formula::unary(Kind::Dia, f)}, f}};
    case PK::UnionClosed:
      return {{{bin(Kind::TensorOr)}, f}};
    case PK::IntersectionClosed:
      return {{{bin(Kind::TensorAnd)}, f}};
    case PK::Convex:
      return {{{Formula::unary(Kind::Dia, f), bin(Kind::OuterGlobalOr)}, f}};
    case PK::Flat: {
      std::vector<Sequent> all;
      for (auto k : {PK::EmptyTeam, PK::Downward, PK::UnionClosed})
        for (auto& s : property_entailments(f, k)) all.push_back(std::move(s));
      return all;
    }
  }
  return {};
}

bool property_by_entailment(const Formula& f, const Context& ctx, ClosurePropertyKind kind) {
  for (const auto& s : property_entailments(f, kind))
    if (!entails(s.premises, s.conclusion, ctx).holds) return false;
  return true;
}

std::string_view characterization_name(Characterization c) {
  switch (c) {
    case Characterization::UnionIdem: return "union-idem";
    case Characterization::IntersectionIdem: return "intersection-idem";
    case Characterization::ConvexDia: return "convex-dia";
    case Characterization::ConvexBdiaForward: return "convex-bdia-forward";
    case Characterization::DownwardDistr: return "downward-distr";
    case Characterization::UnionConvDistr: return "union-conv-distr";
  }
  return "?";
}

std::optional<Characterization> characterization_from_name(std::string_view name) {
  for (auto c : kAllCharacterizations)
    if (characterization_name(c) == name) return c;
  return std::nullopt;
}

namespace {

// Scans the (ψ, χ) pairs of a pool for a failure of
//   forward:  A ∩ (B ∨ C) ⊆ (A ∩ B) ∨ (A ∩ C)
//   converse: (A ∩ B) ∨ (A ∩ C) ⊆ A ∩ (B ∨ C)
// Both sides are symmetric in B and C, so only pairs i ≤ j are visited.
class DistributivityScan {
 public:
  DistributivityScan(const std::vector<Formula>& pool, const Context& ctx) : ctx_(ctx) {
    for (const auto& g : pool) props_.push_back(denotation(g, ctx));
    if (detail::SmallAlgebra::fits(ctx.num_teams())) {
      alg_.emplace(ctx.num_teams());
      for (const auto& p : props_) {
        words_.push_back(alg_->pack(p));
        images_.push_back(alg_->union_images(words_.back()));
      }
    }
  }

  // Index pair of the first failing (ψ, χ), if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_failure(const TeamProposition& a,
                                                                   bool converse) const {
    const std::size_t n = props_.size();
    if (alg_) {
      const std::uint64_t aw = alg_->pack(a);
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t ab = aw & words_[i];
        for (std::size_t j = i; j < n; ++j) {
          const std::uint64_t lhs = aw & alg_->union_product(words_[i], images_[j].data());
          const std::uint64_t rhs = alg_->union_product(ab, aw & words_[j]);
          if (converse ? (rhs & ~lhs) : (lhs & ~rhs)) return std::pair{i, j};
        }
      }
      return std::nullopt;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const auto lhs = a & ops::union_product(props_[i], props_[j]);
        const auto rhs = ops::union_product(a & props_[i], a & props_[j]);
        if (converse ? !rhs.subset_of(lhs) : !lhs.subset_of(rhs)) return std::pair{i, j};
      }
    return std::nullopt;
  }

 private:
  Context ctx_;
  std::vector<TeamProposition> props_;
  std::optional<detail::SmallAlgebra> alg_;
  std::vector<std::uint64_t> words_;
  std::vector<std::vector<std::uint64_t>> images_;
};

const char* yn(bool b) { return b ? "true" : "false"; }

// Returns a disagreement message, or nothing when both sides agree.
std::optional<std::string> compare(const Formula& f, const Context& ctx, Characterization id,
                                   const std::vector<Formula>& pool,
                                   const DistributivityScan* scan) {
  const auto p = denotation(f, ctx);
  const std::string name = render(f);
  auto mismatch = [&](const char* what, bool closure_side, bool other_side) {
    return name + ": " + what + " closure test says " + yn(closure_side) + ", entailment says " +
           yn(other_side);
  };
  switch (id) {
    case Characterization::UnionIdem:
    case Characterization::IntersectionIdem:
    case Characterization::ConvexDia: {
      const PK k = id == Characterization::UnionIdem          ? PK::UnionClosed
                   : id == Characterization::IntersectionIdem ? PK::IntersectionClosed
                                                              : PK::Convex;
      const bool a = satisfies(p, k);
      const bool b = property_by_entailment(f, ctx, k);
      if (a != b) return mismatch(property_name(k).data(), a, b);
      return std::nullopt;
    }
    case Characterization::ConvexBdiaForward: {
      const bool convex = satisfies(p, PK::Convex);
      const bool ent = entails({Formula::unary(Kind::BlackDia, f),
                                Formula::binary(Kind::OuterGlobalOr, f, f)},
                               f, ctx)
                           .holds;
      if (convex && !ent) return mismatch("convex", convex, ent);
      if (!convex && !p.contains(0) && ent) return mismatch("convex", convex, ent);
      return std::nullopt;
    }
    case Characterization::DownwardDistr: {
      const bool down = satisfies(p, PK::Downward);
      bool refuted = false;
      if (auto w = distributivity_witnesses(f, ctx)) {
        const Formula lhs = Formula::binary(Kind::And, f, Formula::binary(Kind::TensorOr, w->psi, w->chi));
        const Formula rhs = Formula::binary(Kind::TensorOr, Formula::binary(Kind::And, f, w->psi),
                                            Formula::binary(Kind::And, f, w->chi));
        const auto r = entails({lhs}, rhs, ctx);
        refuted = !r.holds;
      }
      bool distributes = !refuted;
      if (distributes && scan) distributes = !scan->first_failure(p, false);
      if (down != distributes) {
        std::string m = mismatch("downward", down, distributes);
        if (down && scan)
          if (auto ij = scan->first_failure(p, false))
            m += " (psi = " + render(pool[ij->first]) + ", chi = " + render(pool[ij->second]) + ")";
        return m;
      }
      return std::nullopt;
    }
    case Characterization::UnionConvDistr: {
      const bool uni = satisfies(p, PK::UnionClosed);
      std::optional<std::pair<std::size_t, std::size_t>> fail;
      if (scan) fail = scan->first_failure(p, true);
      if (uni != !fail.has_value()) {
        std::string m = mismatch("union", uni, !fail);
        if (fail)
          m += " (psi = " + render(pool[fail->first]) + ", chi = " + render(pool[fail->second]) +
               ")";
        return m;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool needs_pairs(Characterization id) {
  return id == Characterization::DownwardDistr || id == Characterization::UnionConvDistr;
}

}  // namespace

AgreementReport check_characterization(const Formula& f, const Context& ctx, Characterization id,
                                       const std::vector<Formula>& pool) {
  ctx.require_covers(f);
  AgreementReport r{std::string(characterization_name(id)),
                    "single formula " + render(f) + " with " + std::to_string(pool.size()) +
                        " pool formulas",
                    0,
                    {}};
  std::optional<DistributivityScan> scan;
  if (needs_pairs(id)) scan.emplace(pool, ctx);
  if (auto d = compare(f, ctx, id, pool, scan ? &*scan : nullptr))
    r.disagreements.push_back(*d);
  else
    ++r.agreements;
  return r;
}

AgreementReport check_characterization_pool(const std::vector<Formula>& pool, const Context& ctx,
                                            Characterization id, std::string pool_description) {
  AgreementReport r{std::string(characterization_name(id)), std::move(pool_description), 0, {}};
  std::optional<DistributivityScan> scan;
  if (needs_pairs(id)) scan.emplace(pool, ctx);
  for (const auto& f : pool) {
    if (auto d = compare(f, ctx, id, pool, scan ? &*scan : nullptr))
      r.disagreements.push_back(*d);
    else
      ++r.agreements;
  }
  return r;
}

}  // namespace teamwb
