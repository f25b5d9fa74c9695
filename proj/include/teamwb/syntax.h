#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "teamwb/property.h"

namespace teamwb {

// Node kinds of the formula tree. Binary kinds from And onwards; the
// conditionals start at IntImp.
enum class Kind : std::uint8_t {
  Atom,
  Bot,
  Top,
  NE,
  Incl,
  Neg,
  Nabla,
  BlackDia,
  Dia,
  And,
  TensorOr,
  GlobalOr,
  OuterGlobalOr,
  TensorAnd,
  IntImp,
  UpImp,
  MaxImp,
  MinImp,
  LinImp,
  RelImp,
  EpIndic,
  EpCf,
  EpCond,
  Entail,
};

inline constexpr std::size_t kKindCount = static_cast<std::size_t>(Kind::Entail) + 1;

// How a connective's clause ranges over teams, relative to the team being
// evaluated. Drives the locality property and the n=4 evaluation strategy.
enum class Quantification : std::uint8_t {
  Pointwise,
  SubsetQuantified,
  SupersetQuantified,
  GlobalQuantified,
};

struct ConnectiveMeta {
  Kind kind;
  std::string_view id;     // stable identifier, also used on the command line
  int arity;               // 0 for atoms and constants
  std::string_view token;  // concrete syntax
  Quantification quantification;
  PropertySet preserves;   // closure properties preserved when all arguments have them
};

const ConnectiveMeta& connective_meta(Kind kind);
const std::array<ConnectiveMeta, kKindCount>& all_connectives();
// Looks a connective up by id or token ("->", "tand", "NE", "atom", ...).
std::optional<Kind> connective_from_id(std::string_view id);

bool is_conditional(Kind kind);
std::string_view quantification_name(Quantification q);

// Immutable formula tree with structural equality. Copies share nodes.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula bot();
  static Formula top();
  static Formula ne();
  // [b1 ... bk <= v1 ... vk]; throws ContextError on malformed input.
  static Formula inclusion(std::vector<bool> bits, std::vector<std::string> vars);
  static Formula unary(Kind kind, Formula arg);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  int arity() const;
  const std::string& name() const { return node_->name; }
  const std::vector<bool>& bits() const { return node_->bits; }
  const std::vector<std::string>& vars() const { return node_->vars; }
  const Formula& child(std::size_t i) const;
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }

  int depth() const { return node_->depth; }
  int size() const { return node_->size; }

  // Identity of the shared node; used as a memo key inside a single query.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  struct Node {
    Kind kind;
    std::string name;
    std::vector<bool> bits;
    std::vector<std::string> vars;
    std::vector<Formula> kids;
    int depth = 1;
    int size = 1;
  };

  std::shared_ptr<const Node> node_;
};

Formula parse(std::string_view text);
std::string render(const Formula& f);
std::set<std::string> free_variables(const Formula& f);

// True when every variable name is a well-formed identifier.
bool is_identifier(std::string_view name);

}  // namespace teamwb
