#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teamwb/syntax.h"

namespace teamwb {

// Bit i set iff valuation i of the context is a member. Contexts have at most
// 4 variables, hence at most 16 valuations.
using Team = std::uint32_t;

// Ordered list of distinct variables. Valuation i assigns variable k the bit
// (n-1-k) of i, so valuations are enumerated in lexicographic order with the
// first variable most significant.
class Context {
 public:
  static constexpr int kDefaultCap = 4;
  static constexpr int kHardCap = 4;

  explicit Context(std::vector<std::string> vars, int cap = kDefaultCap);
  // Parses "p,q,r".
  static Context from_list(std::string_view csv, int cap = kDefaultCap);

  int size() const { return static_cast<int>(vars_.size()); }
  int num_valuations() const { return 1 << size(); }
  std::size_t num_teams() const { return std::size_t{1} << num_valuations(); }
  Team full_team() const { return static_cast<Team>((std::uint64_t{1} << num_valuations()) - 1); }
  const std::vector<std::string>& vars() const { return vars_; }

  std::optional<int> index_of(std::string_view name) const;
  bool value(int valuation, int var) const { return (valuation >> (size() - 1 - var)) & 1; }
  // Valuations making variable `var` true, as a team.
  Team true_set(int var) const;

  // "(p1,q0)"
  std::string valuation_label(int valuation) const;
  // "{(p1,q0),(p0,q1)}"
  std::string team_label(Team t) const;
  std::vector<std::vector<int>> team_rows(Team t) const;
  // Team from 0/1 rows aligned with vars(); rejects duplicates.
  Team team_from_rows(const std::vector<std::vector<int>>& rows) const;

  // Throws ContextError unless every variable of f is declared here.
  void require_covers(const Formula& f) const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<std::string> vars_;
};

// A set of teams over one context, stored as a bitset indexed by team mask.
class TeamProposition {
 public:
  explicit TeamProposition(const Context& ctx);
  TeamProposition(std::size_t num_teams, bool full);

  static TeamProposition from_teams(const Context& ctx, const std::vector<Team>& teams);

  std::size_t universe() const { return n_; }
  bool contains(Team t) const { return (words_[t >> 6] >> (t & 63)) & 1; }
  void insert(Team t) { words_[t >> 6] |= std::uint64_t{1} << (t & 63); }
  void erase(Team t) { words_[t >> 6] &= ~(std::uint64_t{1} << (t & 63)); }
  void set(Team t, bool v) { v ? insert(t) : erase(t); }

  std::size_t count() const;
  bool empty() const;
  bool is_full() const;
  bool subset_of(const TeamProposition& other) const;
  // First member in ascending order, if any.
  std::optional<Team> first() const;
  std::optional<Team> first_not_in(const TeamProposition& other) const;
  std::vector<Team> members() const;

  TeamProposition& operator&=(const TeamProposition& o);
  TeamProposition& operator|=(const TeamProposition& o);
  TeamProposition& subtract(const TeamProposition& o);
  TeamProposition complement() const;

  friend TeamProposition operator&(TeamProposition a, const TeamProposition& b) { return a &= b; }
  friend TeamProposition operator|(TeamProposition a, const TeamProposition& b) { return a |= b; }
  friend TeamProposition operator-(TeamProposition a, const TeamProposition& b) {
    return a.subtract(b);
  }
  friend bool operator==(const TeamProposition&, const TeamProposition&) = default;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& mutable_words() { return words_; }
  std::size_t hash() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t x = words_[w]; x != 0; x &= x - 1)
        f(static_cast<Team>(w * 64 + static_cast<unsigned>(__builtin_ctzll(x))));
    }
  }

 private:
  void trim();
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

struct TeamPropositionHash {
  std::size_t operator()(const TeamProposition& p) const { return p.hash(); }
};

struct EntailmentResult {
  bool holds = true;
  std::optional<Team> counterexample;
};

// Truth of f on T by direct recursion on the semantic clauses, memoized per
// (subformula, team). Independent of the denotation engine; used as its
// oracle and as the default strategy for single-team queries.
class RecursiveEvaluator {
 public:
  explicit RecursiveEvaluator(const Context& ctx);
  ~RecursiveEvaluator();
  RecursiveEvaluator(const RecursiveEvaluator&) = delete;
  RecursiveEvaluator& operator=(const RecursiveEvaluator&) = delete;

  bool eval(const Formula& f, Team t);

 private:
  struct Impl;
  Impl* impl_;
};

// Computes denotations bottom-up with one set transformer per connective.
class DenotationEngine {
 public:
  explicit DenotationEngine(const Context& ctx);
  const Context& context() const { return ctx_; }

  TeamProposition denote(const Formula& f);

  // The transformer of a single connective applied to argument denotations.
  TeamProposition apply(Kind kind, const TeamProposition& a) const;
  TeamProposition apply(Kind kind, const TeamProposition& a, const TeamProposition& b) const;
  TeamProposition leaf(const Formula& f) const;

 private:
  Context ctx_;
};

// Set transformers shared by the denotation engine and the closure checker.
namespace ops {
TeamProposition up_closure(const TeamProposition& p);
TeamProposition down_closure(const TeamProposition& p);
// {T : every subteam of T is in p}
TeamProposition down_core(const TeamProposition& p);
// {X ∪ Y : X ∈ a, Y ∈ b}
TeamProposition union_product(const TeamProposition& a, const TeamProposition& b);
// {X ∩ Y : X ∈ a, Y ∈ b}
TeamProposition intersection_product(const TeamProposition& a, const TeamProposition& b);
// {U \ T : T ∈ p} where U is the full team.
TeamProposition complement_teams(const TeamProposition& p);
// {T : T ⊆ w}
TeamProposition powerset(std::size_t num_teams, Team w);
}  // namespace ops

bool eval(const Formula& f, Team t, const Context& ctx);
TeamProposition denotation(const Formula& f, const Context& ctx);
EntailmentResult entails(const std::vector<Formula>& premises, const Formula& conclusion,
                         const Context& ctx);
// {v restricted to sub : v ∈ T}; throws ContextError unless sub ⊆ ctx.
Team restrict_team(Team t, const Context& ctx, const Context& sub);

// True when f contains a connective quantifying over all teams of the context.
bool uses_global_quantification(const Formula& f);

}  // namespace teamwb
