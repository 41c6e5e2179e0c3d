#pragma once

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diairesis/errors.hpp"
#include "diairesis/four_valued.hpp"

namespace diairesis {

// Propositional formulas over named atoms with ~, &, |.
// Immutable, structurally shared; copying is cheap.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or };

  static Formula make_atom(std::string name) {
    if (name.empty() || !is_atom_start(name.front()))
      throw std::invalid_argument("bad atom name '" + name + "'");
    for (char c : name.substr(1))
      if (!is_atom_char(c))
        throw std::invalid_argument("bad atom name '" + name + "'");
    return Formula(std::make_shared<const Node>(
        Node{Kind::Atom, std::move(name), nullptr, nullptr}));
  }

  static Formula make_not(Formula f) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::Not, {}, std::move(f.node_), nullptr}));
  }

  static Formula make_and(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::And, {}, std::move(lhs.node_), std::move(rhs.node_)}));
  }

  static Formula make_or(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::Or, {}, std::move(lhs.node_), std::move(rhs.node_)}));
  }

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  friend bool operator==(const Formula& a, const Formula& b) {
    return structurally_equal(a.node_.get(), b.node_.get());
  }

  static constexpr bool is_atom_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  }
  static constexpr bool is_atom_char(char c) {
    return is_atom_start(c) || (c >= '0' && c <= '9') || c == '_';
  }

 private:
  struct Node {
    Kind kind;
    std::string name;  // atoms only
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static bool structurally_equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a == nullptr || b == nullptr) return false;
    if (a->kind != b->kind || a->name != b->name) return false;
    return structurally_equal(a->lhs.get(), b->lhs.get()) &&
           structurally_equal(a->rhs.get(), b->rhs.get());
  }

  std::shared_ptr<const Node> node_;
};

using Valuation = std::map<std::string, Value>;

namespace detail {

// Grammar (whitespace insignificant, offsets are byte positions):
//   formula = or ; or = and { "|" and } ; and = not { "&" not } ;
//   not = "~" not | atom-or-paren ; atom-or-paren = ATOM | "(" formula ")" ;
//   ATOM = letter { letter | digit | "_" } ;
// The unicode spellings of the three connectives are accepted as aliases.
class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("empty formula", pos_);
    Formula f = parse_or();
    skip_ws();
    if (pos_ < text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return f;
  }

 private:
  Formula parse_or() {
    Formula f = parse_and();
    while (eat_or()) f = Formula::make_or(std::move(f), parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_not();
    while (eat_and()) f = Formula::make_and(std::move(f), parse_not());
    return f;
  }

  Formula parse_not() {
    skip_ws();
    if (eat_literal("~") || eat_literal("\xc2\xac")) return Formula::make_not(parse_not());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("expected an atom or '('", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      Formula f = parse_or();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return f;
    }
    if (!Formula::is_atom_start(text_[pos_]))
      throw SyntaxError("expected an atom or '('", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && Formula::is_atom_char(text_[pos_])) ++pos_;
    return Formula::make_atom(std::string(text_.substr(start, pos_ - start)));
  }

  bool eat_and() {
    skip_ws();
    return eat_literal("&") || eat_literal("\xe2\x88\xa7");
  }

  bool eat_or() {
    skip_ws();
    return eat_literal("|") || eat_literal("\xe2\x88\xa8");
  }

  bool eat_literal(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Not: return 3;
    case Formula::Kind::Atom: return 4;
  }
  return 4;
}

inline void print_rec(const Formula& f, int parent_prec, bool right_side,
                      std::string& out) {
  const int prec = precedence(f.kind());
  // left-associative operators: the right operand of an equal-precedence
  // parent needs parentheses to survive a round trip
  const bool parens =
      prec < parent_prec || (prec == parent_prec && right_side);
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom_name();
      break;
    case Formula::Kind::Not:
      out += '~';
      print_rec(f.lhs(), precedence(Formula::Kind::Not), false, out);
      break;
    case Formula::Kind::And:
      print_rec(f.lhs(), prec, false, out);
      out += " & ";
      print_rec(f.rhs(), prec, true, out);
      break;
    case Formula::Kind::Or:
      print_rec(f.lhs(), prec, false, out);
      out += " | ";
      print_rec(f.rhs(), prec, true, out);
      break;
  }
  if (parens) out += ')';
}

inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.insert(f.atom_name());
      break;
    case Formula::Kind::Not:
      collect_atoms(f.lhs(), out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      break;
  }
}

template <typename Lookup>
Value evaluate_with(const Formula& f, const Lookup& lookup) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return lookup(f.atom_name());
    case Formula::Kind::Not:
      return neg(evaluate_with(f.lhs(), lookup));
    case Formula::Kind::And:
      return conj(evaluate_with(f.lhs(), lookup),
                  evaluate_with(f.rhs(), lookup));
    case Formula::Kind::Or:
      return disj(evaluate_with(f.lhs(), lookup),
                  evaluate_with(f.rhs(), lookup));
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace detail

inline Formula parse(std::string_view text) {
  return detail::FormulaParser(text).parse();
}

// Canonical text with the fewest parentheses that still round-trips.
inline std::string print(const Formula& f) {
  std::string out;
  detail::print_rec(f, 0, false, out);
  return out;
}

// Sorted, deduplicated atom names.
inline std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> s;
  detail::collect_atoms(f, s);
  return {s.begin(), s.end()};
}

inline Value evaluate(const Formula& f, const Valuation& v) {
  return detail::evaluate_with(f, [&](const std::string& name) {
    const auto it = v.find(name);
    if (it == v.end()) throw MissingAtomError(name);
    return it->second;
  });
}

constexpr bool is_designated(Value v) {
  return v == Value::T || v == Value::B;
}

inline constexpr std::size_t entails_max_atoms = 12;

// Designated-value entailment: every valuation of the atoms that makes all
// premises designated must make the conclusion designated. The designated
// set is {T, B}. The full 4^k valuation space is enumerated; above
// entails_max_atoms this refuses to run rather than sample.
inline bool entails(std::span<const Formula> premises, const Formula& conclusion) {
  std::set<std::string> names;
  for (const Formula& p : premises) detail::collect_atoms(p, names);
  detail::collect_atoms(conclusion, names);

  const std::vector<std::string> atom_list(names.begin(), names.end());
  if (atom_list.size() > entails_max_atoms)
    throw CapacityError("entailment over " + std::to_string(atom_list.size()) +
                        " atoms exceeds the " +
                        std::to_string(entails_max_atoms) + "-atom guard");

  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < atom_list.size(); ++i) index[atom_list[i]] = i;

  std::vector<Value> current(atom_list.size(), Value::N);
  const auto lookup = [&](const std::string& name) {
    return current[index.at(name)];
  };

  const std::size_t rows = std::size_t{1} << (2 * atom_list.size());
  for (std::size_t row = 0; row < rows; ++row) {
    std::size_t code = row;
    for (std::size_t i = 0; i < current.size(); ++i) {
      current[i] = all_values[code & 0b11];
      code >>= 2;
    }
    bool premises_hold = true;
    for (const Formula& p : premises) {
      if (!is_designated(detail::evaluate_with(p, lookup))) {
        premises_hold = false;
        break;
      }
    }
    if (premises_hold && !is_designated(detail::evaluate_with(conclusion, lookup)))
      return false;
  }
  return true;
}

inline bool entails(std::initializer_list<Formula> premises,
                    const Formula& conclusion) {
  return entails(std::span<const Formula>(premises.begin(), premises.size()),
                 conclusion);
}

}  // namespace diairesis
