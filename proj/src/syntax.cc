#include "teamwb/syntax.h"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "teamwb/errors.h"

namespace teamwb {

namespace {

using P = ClosurePropertyKind;
using Q = Quantification;

constexpr std::array<ConnectiveMeta, kKindCount> kConnectives = {{
    {Kind::Atom, "atom", 0, "", Q::Pointwise, {}},
    {Kind::Bot, "bot", 0, "bot", Q::Pointwise, {}},
    {Kind::Top, "top", 0, "top", Q::Pointwise, {}},
    {Kind::NE, "NE", 0, "NE", Q::Pointwise, {}},
    {Kind::Incl, "incl", 0, "<=", Q::Pointwise, {}},
    {Kind::Neg, "~", 1, "~", Q::Pointwise,
     {P::Downward, P::UnionClosed, P::Convex, P::IntersectionClosed}},
    {Kind::Nabla, "nabla", 1, "nabla", Q::SubsetQuantified, {P::UnionClosed, P::EmptyTeam}},
    {Kind::BlackDia, "bdia", 1, "bdia", Q::SubsetQuantified, {P::Convex}},
    {Kind::Dia, "dia", 1, "dia", Q::SubsetQuantified, {}},
    {Kind::And, "/\\", 2, "/\\", Q::Pointwise,
     {P::Downward, P::UnionClosed, P::Convex, P::IntersectionClosed}},
    {Kind::TensorOr, "\\/", 2, "\\/", Q::SubsetQuantified, {P::Downward, P::UnionClosed}},
    {Kind::GlobalOr, "vv", 2, "vv", Q::Pointwise, {P::Downward, P::Upward}},
    {Kind::OuterGlobalOr, "ovv", 2, "ovv", Q::SupersetQuantified, {P::Convex}},
    {Kind::TensorAnd, "tand", 2, "tand", Q::SupersetQuantified, {P::IntersectionClosed}},
    {Kind::IntImp, "->", 2, "->", Q::SubsetQuantified, {P::Downward, P::Convex}},
    {Kind::UpImp, "up->", 2, "up->", Q::SupersetQuantified, {P::Upward}},
    {Kind::MaxImp, "max->", 2, "max->", Q::SubsetQuantified, {P::IntersectionClosed}},
    {Kind::MinImp, "min->", 2, "min->", Q::SupersetQuantified, {P::UnionClosed}},
    {Kind::LinImp, "lin->", 2, "lin->", Q::GlobalQuantified, {P::UnionClosed, P::Downward}},
    {Kind::RelImp, "rel->", 2, "rel->", Q::GlobalQuantified, {P::UnionClosed, P::Downward}},
    {Kind::EpIndic, "ei->", 2, "ei->", Q::SubsetQuantified, {P::UnionClosed}},
    {Kind::EpCf, "ecf->", 2, "ecf->", Q::SubsetQuantified,
     {P::EmptyTeam, P::UnionClosed, P::Upward, P::IntersectionClosed, P::Convex}},
    {Kind::EpCond, "ec->", 2, "ec->", Q::SubsetQuantified, {P::UnionClosed, P::Upward}},
    {Kind::Entail, "ent->", 2, "ent->", Q::GlobalQuantified,
     {P::Downward, P::UnionClosed, P::Convex, P::Upward, P::IntersectionClosed}},
}};

// Binding strength used by the parser and the renderer.
enum Level : int { kCond = 1, kDisj = 2, kConj = 3, kUnary = 4, kPrimary = 5 };

int level_of(Kind k) {
  switch (k) {
    case Kind::Neg:
    case Kind::Nabla:
    case Kind::BlackDia:
    case Kind::Dia:
      return kUnary;
    case Kind::And:
    case Kind::TensorAnd:
      return kConj;
    case Kind::TensorOr:
    case Kind::GlobalOr:
    case Kind::OuterGlobalOr:
      return kDisj;
    default:
      return is_conditional(k) ? kCond : kPrimary;
  }
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  Ident,
  Bit,
  Constant,  // bot, top, NE
  Unary,     // ~ nabla bdia dia
  Conj,      // /\ tand
  Disj,      // \/ vv ovv
  Arrow,     // all conditionals
  LParen,
  RParen,
  LBracket,
  RBracket,
  Le,
  End,
};

struct Token {
  Tok tok;
  std::size_t pos;
  std::string text;
  Kind kind = Kind::Atom;
};

const std::unordered_set<std::string_view>& keywords() {
  static const std::unordered_set<std::string_view> kw = {"bot", "top", "nabla", "bdia",
                                                          "dia", "vv",  "ovv",   "tand"};
  return kw;
}

struct ArrowPrefix {
  std::string_view word;
  Kind kind;
};
constexpr std::array<ArrowPrefix, 9> kArrowPrefixes = {{
    {"up", Kind::UpImp},
    {"max", Kind::MaxImp},
    {"min", Kind::MinImp},
    {"lin", Kind::LinImp},
    {"rel", Kind::RelImp},
    {"ei", Kind::EpIndic},
    {"ecf", Kind::EpCf},
    {"ec", Kind::EpCond},
    {"ent", Kind::Entail},
}};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (i_ >= text_.size()) {
        out.push_back({Tok::End, i_, ""});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  bool starts_with(std::string_view s) const { return text_.substr(i_, s.size()) == s; }

  Token next() {
    const std::size_t start = i_;
    const char c = text_[i_];
    auto simple = [&](Tok t, std::size_t len, Kind k = Kind::Atom) {
      i_ += len;
      return Token{t, start, std::string(text_.substr(start, len)), k};
    };
    if (c == '(') return simple(Tok::LParen, 1);
    if (c == ')') return simple(Tok::RParen, 1);
    if (c == '[') return simple(Tok::LBracket, 1);
    if (c == ']') return simple(Tok::RBracket, 1);
    if (c == '~') return simple(Tok::Unary, 1, Kind::Neg);
    if (starts_with("/\\")) return simple(Tok::Conj, 2, Kind::And);
    if (starts_with("\\/")) return simple(Tok::Disj, 2, Kind::TensorOr);
    if (starts_with("->")) return simple(Tok::Arrow, 2, Kind::IntImp);
    if (starts_with("<=")) return simple(Tok::Le, 2);
    if (starts_with("=("))
      throw SyntaxError(start, "dependence atoms =(...) are reserved and not supported");
    if (starts_with("\xE2\x8A\xBD"))
      throw SyntaxError(start, "Hodges' disjunction is reserved and not supported");
    if (starts_with("\xE2\x88\xA8\xCC\x87"))
      throw SyntaxError(start, "relevant disjunction is reserved and not supported");
    if (c == '0' || c == '1') {
      if (i_ + 1 < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_ + 1])))
        throw SyntaxError(start, "unknown token");
      return simple(Tok::Bit, 1);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
        ++j;
      const std::string_view word = text_.substr(i_, j - i_);
      if (text_.substr(j, 2) == "->") {
        for (const auto& p : kArrowPrefixes) {
          if (p.word == word) return simple(Tok::Arrow, word.size() + 2, p.kind);
        }
      }
      i_ = j;
      Token t{Tok::Ident, start, std::string(word)};
      if (word == "NE") {
        t.tok = Tok::Constant;
        t.kind = Kind::NE;
      } else if (word == "bot" || word == "top") {
        t.tok = Tok::Constant;
        t.kind = word == "bot" ? Kind::Bot : Kind::Top;
      } else if (word == "nabla" || word == "bdia" || word == "dia") {
        t.tok = Tok::Unary;
        t.kind = word == "nabla" ? Kind::Nabla : word == "bdia" ? Kind::BlackDia : Kind::Dia;
      } else if (word == "vv" || word == "ovv") {
        t.tok = Tok::Disj;
        t.kind = word == "vv" ? Kind::GlobalOr : Kind::OuterGlobalOr;
      } else if (word == "tand") {
        t.tok = Tok::Conj;
        t.kind = Kind::TensorAnd;
      } else if (!is_identifier(word)) {
        throw SyntaxError(start, "unknown token '" + std::string(word) + "'");
      }
      return t;
    }
    throw SyntaxError(start, "unknown token '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Recursive-descent parser over the token list.

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = conditional();
    if (peek().tok != Tok::End) throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& take() { return toks_[k_++]; }

  void expect(Tok t, const char* what) {
    if (peek().tok != t)
      throw SyntaxError(peek().pos, std::string("expected ") + what +
                                        (peek().tok == Tok::End ? " at end of input"
                                                                : ", found '" + peek().text + "'"));
    ++k_;
  }

  Formula conditional() {
    Formula lhs = disjunction();
    if (peek().tok == Tok::Arrow) {
      const Kind k = take().kind;
      return Formula::binary(k, lhs, conditional());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (peek().tok == Tok::Disj) {
      const Kind k = take().kind;
      acc = Formula::binary(k, acc, conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (peek().tok == Tok::Conj) {
      const Kind k = take().kind;
      acc = Formula::binary(k, acc, unary());
    }
    return acc;
  }

  Formula unary() {
    if (peek().tok == Tok::Unary) {
      const Kind k = take().kind;
      return Formula::unary(k, unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.tok) {
      case Tok::Ident:
        ++k_;
        return Formula::atom(t.text);
      case Tok::Constant:
        ++k_;
        return t.kind == Kind::Bot ? Formula::bot() : t.kind == Kind::Top ? Formula::top()
                                                                         : Formula::ne();
      case Tok::LParen: {
        ++k_;
        Formula inner = conditional();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::LBracket:
        return inclusion();
      case Tok::End:
        throw SyntaxError(t.pos, "unexpected end of input");
      default:
        throw SyntaxError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  Formula inclusion() {
    const std::size_t open = take().pos;
    std::vector<bool> bits;
    while (peek().tok == Tok::Bit) bits.push_back(take().text == "1");
    expect(Tok::Le, "'<='");
    std::vector<std::string> vars;
    while (peek().tok == Tok::Ident) vars.push_back(take().text);
    expect(Tok::RBracket, "']'");
    if (bits.empty() || vars.empty())
      throw SyntaxError(open, "malformed inclusion atom: empty bit or variable list");
    if (bits.size() != vars.size())
      throw SyntaxError(open, "malformed inclusion atom: " + std::to_string(bits.size()) +
                                  " bits but " + std::to_string(vars.size()) + " variables");
    std::set<std::string> seen;
    for (const auto& v : vars) {
      if (!seen.insert(v).second)
        throw SyntaxError(open, "malformed inclusion atom: duplicate variable '" + v + "'");
    }
    return Formula::inclusion(std::move(bits), std::move(vars));
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

void render_into(const Formula& f, std::string& out);

void render_child(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  const Kind k = f.kind();
  switch (k) {
    case Kind::Atom:
      out += f.name();
      return;
    case Kind::Bot:
    case Kind::Top:
    case Kind::NE:
      out += connective_meta(k).token;
      return;
    case Kind::Incl:
      out += '[';
      for (bool b : f.bits()) {
        out += b ? '1' : '0';
        out += ' ';
      }
      out += "<=";
      for (const auto& v : f.vars()) {
        out += ' ';
        out += v;
      }
      out += ']';
      return;
    default:
      break;
  }
  const int lvl = level_of(k);
  const auto& tok = connective_meta(k).token;
  if (f.arity() == 1) {
    out += tok;
    if (k != Kind::Neg) out += ' ';
    render_child(f.child(0), level_of(f.child(0).kind()) < kUnary, out);
    return;
  }
  const int l = level_of(f.lhs().kind());
  const int r = level_of(f.rhs().kind());
  // Conditionals associate to the right, everything else to the left.
  const bool right_assoc = lvl == kCond;
  render_child(f.lhs(), right_assoc ? l <= lvl : l < lvl, out);
  out += ' ';
  out += tok;
  out += ' ';
  render_child(f.rhs(), right_assoc ? r < lvl : r <= lvl, out);
}

}  // namespace

std::string_view property_name(ClosurePropertyKind kind) {
  switch (kind) {
    case ClosurePropertyKind::EmptyTeam: return "empty-team";
    case ClosurePropertyKind::Downward: return "downward";
    case ClosurePropertyKind::Upward: return "upward";
    case ClosurePropertyKind::UnionClosed: return "union";
    case ClosurePropertyKind::IntersectionClosed: return "intersection";
    case ClosurePropertyKind::Convex: return "convex";
    case ClosurePropertyKind::Flat: return "flat";
  }
  return "?";
}

std::optional<ClosurePropertyKind> property_from_name(std::string_view name) {
  for (auto k : kAllClosureProperties)
    if (property_name(k) == name) return k;
  return std::nullopt;
}

const ConnectiveMeta& connective_meta(Kind kind) {
  return kConnectives[static_cast<std::size_t>(kind)];
}

const std::array<ConnectiveMeta, kKindCount>& all_connectives() { return kConnectives; }

std::optional<Kind> connective_from_id(std::string_view id) {
  for (const auto& m : kConnectives)
    if (m.id == id || (!m.token.empty() && m.token == id)) return m.kind;
  return std::nullopt;
}

bool is_conditional(Kind kind) { return kind >= Kind::IntImp; }

std::string_view quantification_name(Quantification q) {
  switch (q) {
    case Quantification::Pointwise: return "pointwise";
    case Quantification::SubsetQuantified: return "subset-quantified";
    case Quantification::SupersetQuantified: return "superset-quantified";
    case Quantification::GlobalQuantified: return "global-quantified";
  }
  return "?";
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return !keywords().contains(name);
}

int Formula::arity() const { return connective_meta(kind()).arity; }

const Formula& Formula::child(std::size_t i) const { return node_->kids.at(i); }

Formula Formula::atom(std::string name) {
  if (!is_identifier(name)) throw ContextError("invalid variable name '" + name + "'");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::bot() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::Bot, {}, {}, {}, {}, 1, 1}));
  return f;
}

Formula Formula::top() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::Top, {}, {}, {}, {}, 1, 1}));
  return f;
}

Formula Formula::ne() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::NE, {}, {}, {}, {}, 1, 1}));
  return f;
}

Formula Formula::inclusion(std::vector<bool> bits, std::vector<std::string> vars) {
  if (bits.empty() || bits.size() != vars.size())
    throw ContextError("inclusion atom needs equal, positive numbers of bits and variables");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw ContextError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw ContextError("duplicate variable '" + v + "' in inclusion atom");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Incl;
  n->bits = std::move(bits);
  n->vars = std::move(vars);
  return Formula(std::move(n));
}

Formula Formula::unary(Kind kind, Formula arg) {
  if (connective_meta(kind).arity != 1) throw ContextError("not a unary connective");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->depth = arg.depth() + 1;
  n->size = arg.size() + 1;
  n->kids.push_back(std::move(arg));
  return Formula(std::move(n));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  if (connective_meta(kind).arity != 2) throw ContextError("not a binary connective");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->depth = std::max(lhs.depth(), rhs.depth()) + 1;
  n->size = lhs.size() + rhs.size() + 1;
  n->kids.push_back(std::move(lhs));
  n->kids.push_back(std::move(rhs));
  return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.name() != b.name() || a.bits() != b.bits() || a.vars() != b.vars()) return false;
  for (std::size_t i = 0; i < a.node_->kids.size(); ++i)
    if (a.child(i) != b.child(i)) return false;
  return true;
}

Formula parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> vars;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (g->kind() == Kind::Atom) vars.insert(g->name());
    if (g->kind() == Kind::Incl) vars.insert(g->vars().begin(), g->vars().end());
    for (int i = 0; i < g->arity(); ++i) stack.push_back(&g->child(i));
  }
  return vars;
}

}  // namespace teamwb
