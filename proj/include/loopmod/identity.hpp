#pragma once

#include <array>
#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopmod/error.hpp"
#include "loopmod/loop_table.hpp"
#include "loopmod/permutation.hpp"

namespace loopmod {

/// Variable binding environment for the single-letter variables a..z.
class Assignment {
public:
  void bind(char v, int value) {
    vals_[index(v)] = value;
    bound_[index(v)] = true;
  }

  bool bound(char v) const { return bound_[index(v)]; }

  int lookup(char v) const {
    if (!bound_[index(v)])
      throw Error(Errc::unbound_variable, std::string("variable '") + v + "' is unbound");
    return vals_[index(v)];
  }

private:
  static std::size_t index(char v) { return static_cast<std::size_t>(v - 'a'); }
  std::array<int, 26> vals_{};
  std::array<bool, 26> bound_{};
};

/// A loop word: either a variable or a product of two subterms.
/// Shares structure; cheap to copy.
class Term {
public:
  static Term var(char name) { return Term(name, nullptr, nullptr); }

  static Term product(Term lhs, Term rhs) {
    return Term(0, std::make_shared<Term>(std::move(lhs)), std::make_shared<Term>(std::move(rhs)));
  }

  bool is_var() const { return var_ != 0; }
  char var_name() const { return var_; }
  const Term& left() const { return *lhs_; }
  const Term& right() const { return *rhs_; }

  int count_occurrences(char v) const {
    if (is_var()) return var_ == v ? 1 : 0;
    return lhs_->count_occurrences(v) + rhs_->count_occurrences(v);
  }

  void collect_variables(std::vector<char>& out) const {
    if (is_var()) {
      for (char c : out)
        if (c == var_) return;
      out.push_back(var_);
      return;
    }
    lhs_->collect_variables(out);
    rhs_->collect_variables(out);
  }

  int evaluate(const LoopTable& loop, const Assignment& asg) const {
    if (is_var()) return asg.lookup(var_);
    return loop.mul(lhs_->evaluate(loop, asg), rhs_->evaluate(loop, asg));
  }

  /// Fully parenthesized rendering: products as "(l*r)".
  std::string to_string() const {
    if (is_var()) return std::string(1, var_);
    return "(" + lhs_->to_string() + "*" + rhs_->to_string() + ")";
  }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.is_var() != b.is_var()) return false;
    if (a.is_var()) return a.var_ == b.var_;
    return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
  }

private:
  Term(char v, std::shared_ptr<const Term> l, std::shared_ptr<const Term> r)
      : var_(v), lhs_(std::move(l)), rhs_(std::move(r)) {}

  char var_;
  std::shared_ptr<const Term> lhs_, rhs_;
};

/// Parsed equational identity. `variables` lists the distinct variables in
/// first-occurrence order (lhs scanned before rhs).
struct IdentityAst {
  Term lhs;
  Term rhs;
  std::vector<char> variables;

  std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }

  friend bool operator==(const IdentityAst& a, const IdentityAst& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs && a.variables == b.variables;
  }
};

namespace detail {

// Grammar:   identity := term '=' term
//            term     := var | '(' term '*' term ')'
//            var      := [a-z]
// Whitespace is ignored; the outermost parentheses of a side may be omitted
// for a single product. All other grouping is explicit.
class IdentityParser {
public:
  explicit IdentityParser(std::string_view text) : text_(text) {}

  IdentityAst parse() {
    skip_ws();
    if (at_end() || peek() == '=') throw Error(Errc::empty_side, "left side is empty", pos());
    Term lhs = parse_side();
    skip_ws();
    if (at_end() || peek() != '=')
      throw Error(Errc::syntax_error, err("expected '='"), pos());
    ++pos_;
    skip_ws();
    if (at_end()) throw Error(Errc::empty_side, "right side is empty", pos());
    Term rhs = parse_side();
    skip_ws();
    if (!at_end()) throw Error(Errc::syntax_error, err("unexpected trailing input"), pos());
    std::vector<char> vars;
    lhs.collect_variables(vars);
    rhs.collect_variables(vars);
    return IdentityAst{std::move(lhs), std::move(rhs), std::move(vars)};
  }

private:
  Term parse_side() {
    Term first = parse_term();
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      Term second = parse_term();
      return Term::product(std::move(first), std::move(second));
    }
    return first;
  }

  Term parse_term() {
    skip_ws();
    if (at_end()) throw Error(Errc::syntax_error, err("expected a term"), pos());
    const char c = peek();
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return Term::var(c);
    }
    if (c == '(') {
      ++pos_;
      Term lhs = parse_term();
      skip_ws();
      if (at_end() || peek() != '*')
        throw Error(Errc::syntax_error, err("expected '*'"), pos());
      ++pos_;
      Term rhs = parse_term();
      skip_ws();
      if (at_end() || peek() != ')')
        throw Error(Errc::syntax_error, err("expected ')'"), pos());
      ++pos_;
      return Term::product(std::move(lhs), std::move(rhs));
    }
    throw Error(Errc::syntax_error, err("expected variable or '('"), pos());
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  long pos() const { return static_cast<long>(pos_); }

  std::string err(const std::string& what) const {
    return "syntax error at byte " + std::to_string(pos_) + ": " + what;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline IdentityAst parse_identity(std::string_view text) {
  return detail::IdentityParser(text).parse();
}

/// Named identities. "kunen" and "moufang-right" denote the same equation
/// ((x*y)*z)*y = x*(y*(z*y)); both names are accepted.
inline IdentityAst builtin_identity(std::string_view name) {
  if (name == "associativity") return parse_identity("(x*y)*z = x*(y*z)");
  if (name == "kunen" || name == "moufang-right") return parse_identity("((x*y)*z)*y = x*(y*(z*y))");
  if (name == "moufang-left") return parse_identity("x*(y*(x*z)) = ((x*y)*x)*z");
  if (name == "left-bol") return parse_identity("x*(y*(x*z)) = (x*(y*x))*z");
  if (name == "right-bol") return parse_identity("((z*x)*y)*x = z*((x*y)*x)");
  if (name == "flexible") return parse_identity("x*(y*x) = (x*y)*x");
  throw Error(Errc::unknown_builtin, "unknown builtin identity '" + std::string(name) + "'");
}

inline const std::vector<std::string>& builtin_identity_names() {
  static const std::vector<std::string> names = {
      "associativity", "kunen", "moufang-right", "moufang-left",
      "left-bol",      "right-bol", "flexible"};
  return names;
}

/// Outcome of an exhaustive identity check.
struct Verdict {
  struct Counterexample {
    std::vector<std::pair<char, int>> assignment; // in IdentityAst::variables order
    int lhs_value;
    int rhs_value;
  };
  bool holds = false;
  std::optional<Counterexample> counterexample;
};

/// Evaluates both sides under all n^k assignments, in lexicographic order of
/// the variable list; returns the first counterexample if any.
inline Verdict check_identity(const LoopTable& loop, const IdentityAst& id) {
  const int n = loop.order();
  const std::size_t k = id.variables.size();
  std::vector<int> values(k, 0);
  Assignment asg;
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) asg.bind(id.variables[i], values[i]);
    const int lhs = id.lhs.evaluate(loop, asg);
    const int rhs = id.rhs.evaluate(loop, asg);
    if (lhs != rhs) {
      Verdict::Counterexample ce;
      for (std::size_t i = 0; i < k; ++i) ce.assignment.emplace_back(id.variables[i], values[i]);
      ce.lhs_value = lhs;
      ce.rhs_value = rhs;
      return Verdict{false, std::move(ce)};
    }
    // next assignment, last variable fastest
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++values[i] < n) break;
      values[i] = 0;
      if (i == 0) return Verdict{true, std::nullopt};
    }
    if (k == 0) return Verdict{true, std::nullopt};
  }
}

/// One factor of a composite translation operator: L_parameter or R_parameter
/// with a point-free parameter term.
struct TranslationFactor {
  Side side;
  Term parameter;

  std::string to_string() const {
    return std::string(side == Side::left ? "L[" : "R[") + parameter.to_string() + "]";
  }

  friend bool operator==(const TranslationFactor& a, const TranslationFactor& b) {
    return a.side == b.side && a.parameter == b.parameter;
  }
};

/// Ordered word of translation factors, outermost first: applied to a point z
/// the word [f1, ..., fk] denotes f1(f2(...fk(z)...)).
struct TranslationWord {
  std::vector<TranslationFactor> factors;
  char point = 0;

  std::string to_string() const {
    if (factors.empty()) return "id";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += " * ";
      out += factors[i].to_string();
    }
    return out;
  }
};

/// Compiles one side of an identity into a translation word acting on the
/// point variable. Walking from the root toward the unique occurrence of the
/// point, a product whose right subtree holds the point contributes L_{left
/// subtree}, and one whose left subtree holds it contributes R_{right
/// subtree}; factors are listed outermost-first.
inline TranslationWord compile_translation_word(const Term& side, char point) {
  const int occurrences = side.count_occurrences(point);
  if (occurrences != 1)
    throw Error(Errc::nonlinear_point,
                std::string("point variable '") + point + "' occurs " +
                    std::to_string(occurrences) + " times; need exactly 1");
  TranslationWord word;
  word.point = point;
  const Term* cur = &side;
  while (!cur->is_var()) {
    if (cur->right().count_occurrences(point) == 1) {
      word.factors.push_back({Side::left, cur->left()});
      cur = &cur->right();
    } else {
      word.factors.push_back({Side::right, cur->right()});
      cur = &cur->left();
    }
  }
  return word;
}

/// Evaluates each parameter term and composes the translation permutations,
/// outermost first.
inline Permutation evaluate_word(const LoopTable& loop, const TranslationWord& word,
                                 const Assignment& asg) {
  Permutation acc = Permutation::identity(loop.order());
  for (const TranslationFactor& f : word.factors) {
    const int c = f.parameter.evaluate(loop, asg);
    acc = compose(acc, loop.translation(f.side, c));
  }
  return acc;
}

/// Default point variable: the last variable (in declaration order) occurring
/// exactly once on both sides.
inline std::optional<char> default_point_variable(const IdentityAst& id) {
  std::optional<char> point;
  for (char v : id.variables)
    if (id.lhs.count_occurrences(v) == 1 && id.rhs.count_occurrences(v) == 1) point = v;
  return point;
}

} // namespace loopmod
