#ifndef AFINST_FORMULA_HPP
#define AFINST_FORMULA_HPP

// Propositional formula ASTs: parsing (prefix-term and infix syntax),
// printing, decomposition and evaluation under total interpretations.

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace afinst {

enum class Conn { Atom, Neg, And, Or, Imp, Iff, Xor };

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// Immutable tree with shared structure; copies are cheap, mutation is
// impossible, so values are freely shareable across threads.
class Formula {
public:
  static Formula atom(std::string name) {
    return Formula(std::make_shared<Node>(Node{Conn::Atom, std::move(name), nullptr, nullptr}));
  }
  static Formula neg(Formula f) { return unary(Conn::Neg, std::move(f)); }
  static Formula conj(Formula l, Formula r) { return binary(Conn::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return binary(Conn::Or, std::move(l), std::move(r)); }
  static Formula imp(Formula l, Formula r) { return binary(Conn::Imp, std::move(l), std::move(r)); }
  static Formula iff(Formula l, Formula r) { return binary(Conn::Iff, std::move(l), std::move(r)); }
  static Formula xor_(Formula l, Formula r) { return binary(Conn::Xor, std::move(l), std::move(r)); }

  Conn kind() const { return node_->kind; }

  const std::string& atom_name() const {
    if (node_->kind != Conn::Atom) throw std::logic_error("atom_name() on non-atom");
    return node_->name;
  }
  // For Neg this is the single child.
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  bool is_atom() const { return node_->kind == Conn::Atom; }

  friend bool operator==(const Formula& a, const Formula& b) {
    return structural_eq(a.node_.get(), b.node_.get());
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
  struct Node {
    Conn kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula unary(Conn k, Formula c) {
    return Formula(std::make_shared<Node>(Node{k, {}, c.node_, nullptr}));
  }
  static Formula binary(Conn k, Formula l, Formula r) {
    return Formula(std::make_shared<Node>(Node{k, {}, l.node_, r.node_}));
  }

  static bool structural_eq(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Conn::Atom: return a->name == b->name;
      case Conn::Neg: return structural_eq(a->left.get(), b->left.get());
      default:
        return structural_eq(a->left.get(), b->left.get()) &&
               structural_eq(a->right.get(), b->right.get());
    }
  }

  std::shared_ptr<const Node> node_;
};

enum class PrintStyle { Prefix, Infix };

namespace detail {

inline const char* prefix_name(Conn k) {
  switch (k) {
    case Conn::Neg: return "neg";
    case Conn::And: return "and";
    case Conn::Or: return "or";
    case Conn::Imp: return "imp";
    case Conn::Iff: return "iff";
    case Conn::Xor: return "xor";
    default: return "";
  }
}

inline const char* infix_symbol(Conn k) {
  switch (k) {
    case Conn::And: return "&";
    case Conn::Or: return "|";
    case Conn::Imp: return "->";
    case Conn::Iff: return "<->";
    case Conn::Xor: return "^";
    default: return "";
  }
}

// Precedence: ! > & > | > -> > <-> = ^ ; atoms bind tightest.
inline int precedence(Conn k) {
  switch (k) {
    case Conn::Atom: return 6;
    case Conn::Neg: return 5;
    case Conn::And: return 4;
    case Conn::Or: return 3;
    case Conn::Imp: return 2;
    default: return 1;  // Iff, Xor
  }
}

inline void print_prefix(const Formula& f, std::string& out) {
  if (f.is_atom()) {
    out += f.atom_name();
    return;
  }
  out += prefix_name(f.kind());
  out += '(';
  print_prefix(f.left(), out);
  if (f.kind() != Conn::Neg) {
    out += ',';
    print_prefix(f.right(), out);
  }
  out += ')';
}

// Emits the minimal parenthesization that re-parses to the same tree.
// -> is right-associative, the other binary connectives left-associative.
inline void print_infix(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Conn::Atom:
      out += f.atom_name();
      return;
    case Conn::Neg: {
      out += '!';
      Formula c = f.left();
      if (precedence(c.kind()) < precedence(Conn::Neg)) {
        out += '(';
        print_infix(c, out);
        out += ')';
      } else {
        print_infix(c, out);
      }
      return;
    }
    default: {
      int prec = precedence(f.kind());
      bool right_assoc = f.kind() == Conn::Imp;
      Formula l = f.left(), r = f.right();
      int lneed = right_assoc ? prec + 1 : prec;
      int rneed = right_assoc ? prec : prec + 1;
      if (precedence(l.kind()) < lneed) {
        out += '(';
        print_infix(l, out);
        out += ')';
      } else {
        print_infix(l, out);
      }
      out += ' ';
      out += infix_symbol(f.kind());
      out += ' ';
      if (precedence(r.kind()) < rneed) {
        out += '(';
        print_infix(r, out);
        out += ')';
      } else {
        print_infix(r, out);
      }
      return;
    }
  }
}

// Recursive-descent parser over a shared token scan of both syntaxes.
// Prefix terms like and(x,y) are just keyword applications inside the
// infix grammar, so one grammar accepts both (and any mixture).
class Parser {
public:
  explicit Parser(const std::string& text) : text_(text), pos_(0) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after formula");
    return f;
  }

private:
  const std::string& text_;
  std::size_t pos_;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(const char* tok) {
    skip_ws();
    std::size_t len = std::char_traits<char>::length(tok);
    if (text_.compare(pos_, len, tok) == 0) {
      pos_ += len;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // <-> and ^ share the lowest level, left-associative.
  Formula parse_iff() {
    Formula f = parse_imp();
    for (;;) {
      if (eat("<->")) {
        f = Formula::iff(f, parse_imp());
      } else if (peek() == '^' && eat("^")) {
        f = Formula::xor_(f, parse_imp());
      } else {
        return f;
      }
    }
  }

  Formula parse_imp() {
    Formula l = parse_or();
    skip_ws();
    // careful: "<->" also starts with nothing matching "->", but "->" must
    // not consume the tail of "<->" (skip_ws already positioned us).
    if (text_.compare(pos_, 2, "->") == 0) {
      pos_ += 2;
      return Formula::imp(l, parse_imp());  // right-associative
    }
    return l;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek() == '|' && eat("|")) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek() == '&' && eat("&")) f = Formula::conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (eat("!")) return Formula::neg(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_iff();
      if (!eat(")")) fail("unbalanced parentheses: expected ')'");
      return f;
    }
    if (std::isupper(static_cast<unsigned char>(c)))
      fail("atom names must start with a lowercase letter");
    if (!std::islower(static_cast<unsigned char>(c)))
      fail(std::string("unexpected character '") + c + "'");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string ident = text_.substr(start, pos_ - start);
    Conn k;
    if (ident == "neg") k = Conn::Neg;
    else if (ident == "and") k = Conn::And;
    else if (ident == "or") k = Conn::Or;
    else if (ident == "imp") k = Conn::Imp;
    else if (ident == "iff") k = Conn::Iff;
    else if (ident == "xor") k = Conn::Xor;
    else return Formula::atom(std::move(ident));

    if (!eat("(")) {
      pos_ = start;
      fail("connective keyword '" + ident + "' used as an atom");
    }
    Formula l = parse_iff();
    if (k == Conn::Neg) {
      if (!eat(")")) fail("expected ')' after neg argument");
      return Formula::neg(l);
    }
    if (!eat(",")) fail("expected ',' in " + ident + "(...)");
    Formula r = parse_iff();
    if (!eat(")")) fail("expected ')' closing " + ident + "(...)");
    switch (k) {
      case Conn::And: return Formula::conj(l, r);
      case Conn::Or: return Formula::disj(l, r);
      case Conn::Imp: return Formula::imp(l, r);
      case Conn::Iff: return Formula::iff(l, r);
      default: return Formula::xor_(l, r);
    }
  }
};

}  // namespace detail

inline Formula parse_formula(const std::string& text) {
  if (text.empty()) throw ParseError("empty formula", 0);
  return detail::Parser(text).parse();
}

inline std::string print_formula(const Formula& f, PrintStyle style = PrintStyle::Prefix) {
  std::string out;
  if (style == PrintStyle::Prefix)
    detail::print_prefix(f, out);
  else
    detail::print_infix(f, out);
  return out;
}

// All subformulae in pre-order, each distinct tree exactly once.
inline std::vector<Formula> subformulae(const Formula& f) {
  std::vector<Formula> out;
  std::set<std::string> seen;
  auto visit = [&](auto&& self, const Formula& g) -> void {
    std::string key = print_formula(g, PrintStyle::Prefix);
    if (seen.insert(std::move(key)).second) out.push_back(g);
    if (g.is_atom()) return;
    self(self, g.left());
    if (g.kind() != Conn::Neg) self(self, g.right());
  };
  visit(visit, f);
  return out;
}

// Leaf atom names, lexicographically sorted, deduplicated.
inline std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> names;
  auto visit = [&](auto&& self, const Formula& g) -> void {
    if (g.is_atom()) {
      names.insert(g.atom_name());
      return;
    }
    self(self, g.left());
    if (g.kind() != Conn::Neg) self(self, g.right());
  };
  visit(visit, f);
  return {names.begin(), names.end()};
}

// Total truth assignment over a fixed atom set. Lookups outside the
// domain throw rather than defaulting.
class Interpretation {
public:
  Interpretation() = default;
  explicit Interpretation(std::map<std::string, bool> assignment)
      : assignment_(std::move(assignment)) {}

  bool value(const std::string& atom) const {
    auto it = assignment_.find(atom);
    if (it == assignment_.end())
      throw std::out_of_range("atom '" + atom + "' outside interpretation domain");
    return it->second;
  }

  bool covers(const std::string& atom) const { return assignment_.count(atom) != 0; }

  const std::map<std::string, bool>& assignment() const { return assignment_; }

  friend bool operator==(const Interpretation& a, const Interpretation& b) {
    return a.assignment_ == b.assignment_;
  }

private:
  std::map<std::string, bool> assignment_;
};

inline bool eval(const Formula& f, const Interpretation& i) {
  switch (f.kind()) {
    case Conn::Atom: return i.value(f.atom_name());
    case Conn::Neg: return !eval(f.left(), i);
    case Conn::And: return eval(f.left(), i) && eval(f.right(), i);
    case Conn::Or: return eval(f.left(), i) || eval(f.right(), i);
    case Conn::Imp: return !eval(f.left(), i) || eval(f.right(), i);
    case Conn::Iff: return eval(f.left(), i) == eval(f.right(), i);
    case Conn::Xor: return eval(f.left(), i) != eval(f.right(), i);
  }
  throw std::logic_error("unreachable");
}

}  // namespace afinst

#endif  // AFINST_FORMULA_HPP
