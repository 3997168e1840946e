#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hhbounds/errors.hpp"
#include "hhbounds/interval.hpp"

namespace hhb {

/// Immutable expression tree in the single variable x.
///
/// Grammar accepted by parse():
///
///     expr   := term (('+'|'-') term)*
///     term   := factor (('*'|'/') factor)*
///     factor := atom ['^' number]
///     atom   := number | 'x' | '(' expr ')' | ('ln'|'exp'|'abs') '(' expr ')'
///
/// Numbers are decimal literals with an optional sign and exponent. Powers take
/// literal exponents only, which keeps differentiate() total.
///
/// Copies share structure; nodes are never mutated after construction, so
/// expressions can be used from any number of threads.
class Expr {
 public:
  enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Pow, Ln, Exp, Abs };

  static Expr constant(double value);
  static Expr variable();
  static Expr add(Expr lhs, Expr rhs);
  static Expr sub(Expr lhs, Expr rhs);
  static Expr mul(Expr lhs, Expr rhs);
  static Expr div(Expr lhs, Expr rhs);
  static Expr pow(Expr base, double exponent);
  static Expr ln(Expr arg);
  static Expr exp(Expr arg);
  static Expr abs(Expr arg);

  Kind kind() const noexcept;
  /// Literal value of a Constant, or the exponent of a Pow.
  double literal() const noexcept;
  /// Left operand of a binary node, base of a Pow, argument of a function node.
  const Expr& lhs() const;
  const Expr& rhs() const;
  const Expr& arg() const { return lhs(); }
  /// True for the u / abs(u) sign factor emitted by differentiate(); its zeros are kinks of |u|.
  bool sign_form() const noexcept;

  /// Throws DomainError instead of producing NaN or infinity.
  double eval(double x) const;

  /// Fully parenthesized form; parse(str()) is structurally equal to *this.
  std::string str() const;

  /// Structural equality (literals compared exactly).
  bool same_as(const Expr& other) const;

  std::size_t size() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr sign_quotient(Expr arg);

  std::shared_ptr<const Node> node_;

  friend Expr differentiate(const Expr& e);
};

Expr parse(std::string_view source);

/// Exact symbolic derivative with light algebraic simplification.
///
/// d|u| is emitted as (u / abs(u)) * u'; evaluating it where u = 0 raises a
/// DomainError whose kink() flag is set.
Expr differentiate(const Expr& e);

struct DomainViolation {
  std::string subexpression;
  std::string reason;
  double witness;  // a point of [a, b] where the violation was observed
};

struct DomainReport {
  std::vector<DomainViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Sampled check that every node of `e` is defined on all of [a, b].
///
/// Arguments of ln must stay positive, divisors and negative-power bases must
/// not vanish or change sign, non-integer powers need a nonnegative base.
DomainReport domain_check(const Expr& e, const Interval& interval, int samples = 4097);

}  // namespace hhb
