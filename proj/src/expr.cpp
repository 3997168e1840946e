#include "hhbounds/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hhbounds/format.hpp"

namespace hhb {

struct Expr::Node {
  Kind kind;
  double literal = 0.0;
  std::vector<Expr> operands;
  // Div node produced by differentiating abs(): u / abs(u).
  bool sign_form = false;
};

namespace {

bool is_integer(double v) { return std::isfinite(v) && std::floor(v) == v; }

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Expr Expr::constant(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("constant must be finite");
  return Expr(std::make_shared<const Node>(Node{Kind::Constant, value, {}}));
}

Expr Expr::variable() { return Expr(std::make_shared<const Node>(Node{Kind::Variable, 0.0, {}})); }

#define HHB_BINARY(name, K)                                                                           \
  Expr Expr::name(Expr lhs, Expr rhs) {                                                               \
    return Expr(std::make_shared<const Node>(Node{Kind::K, 0.0, {std::move(lhs), std::move(rhs)}})); \
  }
HHB_BINARY(add, Add)
HHB_BINARY(sub, Sub)
HHB_BINARY(mul, Mul)
HHB_BINARY(div, Div)
#undef HHB_BINARY

Expr Expr::pow(Expr base, double exponent) {
  if (!std::isfinite(exponent)) throw std::invalid_argument("pow exponent must be finite");
  return Expr(std::make_shared<const Node>(Node{Kind::Pow, exponent, {std::move(base)}}));
}

Expr Expr::ln(Expr arg) { return Expr(std::make_shared<const Node>(Node{Kind::Ln, 0.0, {std::move(arg)}})); }
Expr Expr::exp(Expr arg) { return Expr(std::make_shared<const Node>(Node{Kind::Exp, 0.0, {std::move(arg)}})); }
Expr Expr::abs(Expr arg) { return Expr(std::make_shared<const Node>(Node{Kind::Abs, 0.0, {std::move(arg)}})); }

Expr Expr::sign_quotient(Expr arg) {
  Expr denom = Expr::abs(arg);
  return Expr(std::make_shared<const Node>(Node{Kind::Div, 0.0, {std::move(arg), std::move(denom)}, true}));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }
double Expr::literal() const noexcept { return node_->literal; }
bool Expr::sign_form() const noexcept { return node_->sign_form; }

const Expr& Expr::lhs() const {
  if (node_->operands.empty()) throw std::logic_error("expression node has no operand");
  return node_->operands[0];
}

const Expr& Expr::rhs() const {
  if (node_->operands.size() < 2) throw std::logic_error("expression node has no right operand");
  return node_->operands[1];
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string("non-finite value in ") + what);
  return v;
}

double eval_node(const Expr& n, double x) {
  using K = Expr::Kind;
  switch (n.kind()) {
    case K::Constant:
      return n.literal();
    case K::Variable:
      return x;
    case K::Add:
      return checked(eval_node(n.lhs(), x) + eval_node(n.rhs(), x), "addition");
    case K::Sub:
      return checked(eval_node(n.lhs(), x) - eval_node(n.rhs(), x), "subtraction");
    case K::Mul:
      return checked(eval_node(n.lhs(), x) * eval_node(n.rhs(), x), "multiplication");
    case K::Div: {
      const double num = eval_node(n.lhs(), x);
      const double den = eval_node(n.rhs(), x);
      if (den == 0.0) {
        if (n.sign_form()) throw DomainError("abs() is not differentiable where its argument is zero", true);
        throw DomainError("division by zero");
      }
      return checked(num / den, "division");
    }
    case K::Pow: {
      const double base = eval_node(n.lhs(), x);
      const double e = n.literal();
      if (base < 0.0 && !is_integer(e)) throw DomainError("negative base with non-integer exponent");
      if (base == 0.0 && e < 0.0) throw DomainError("zero base with negative exponent");
      return checked(std::pow(base, e), "power");
    }
    case K::Ln: {
      const double v = eval_node(n.lhs(), x);
      if (!(v > 0.0)) throw DomainError("ln of a nonpositive value");
      return std::log(v);
    }
    case K::Exp:
      return checked(std::exp(eval_node(n.lhs(), x)), "exp");
    case K::Abs:
      return std::fabs(eval_node(n.lhs(), x));
  }
  throw std::logic_error("unknown expression node");
}

void print_node(const Expr& n, std::string& out) {
  using K = Expr::Kind;
  auto binary = [&](const char* op) {
    out += '(';
    print_node(n.lhs(), out);
    out += op;
    print_node(n.rhs(), out);
    out += ')';
  };
  auto call = [&](const char* name) {
    out += name;
    out += '(';
    print_node(n.lhs(), out);
    out += ')';
  };
  switch (n.kind()) {
    case K::Constant:
      out += format_double(n.literal());
      return;
    case K::Variable:
      out += 'x';
      return;
    case K::Add:
      return binary(" + ");
    case K::Sub:
      return binary(" - ");
    case K::Mul:
      return binary(" * ");
    case K::Div:
      return binary(" / ");
    case K::Pow:
      if (n.lhs().kind() == K::Pow) {
        out += '(';
        print_node(n.lhs(), out);
        out += ')';
      } else {
        print_node(n.lhs(), out);
      }
      out += '^';
      out += format_double(n.literal());
      return;
    case K::Ln:
      return call("ln");
    case K::Exp:
      return call("exp");
    case K::Abs:
      return call("abs");
  }
}

}  // namespace

double Expr::eval(double x) const { return eval_node(*this, x); }

std::string Expr::str() const {
  std::string out;
  print_node(*this, out);
  return out;
}

bool Expr::same_as(const Expr& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind || a.operands.size() != b.operands.size()) return false;
  if ((a.kind == Kind::Constant || a.kind == Kind::Pow) && a.literal != b.literal) return false;
  for (std::size_t i = 0; i < a.operands.size(); ++i) {
    if (!a.operands[i].same_as(b.operands[i])) return false;
  }
  return true;
}

std::size_t Expr::size() const {
  std::size_t n = 1;
  for (const auto& op : node_->operands) n += op.size();
  return n;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr run() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError(0, "empty expression");
    Expr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(pos_, std::string("unexpected character '") + src_[pos_] + "'");
    return e;
  }

 private:
  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        lhs = Expr::add(std::move(lhs), term());
      } else if (accept('-')) {
        lhs = Expr::sub(std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        lhs = Expr::mul(std::move(lhs), factor());
      } else if (accept('/')) {
        lhs = Expr::div(std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    Expr base = atom();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ < src_.size() && (src_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(src_[pos_])))) {
      throw ParseError(pos_, "variable exponent in pow: exponents must be numeric literals");
    }
    if (!starts_number()) throw ParseError(pos_, "expected numeric exponent after '^'");
    return Expr::pow(std::move(base), number());
  }

  Expr atom() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError(pos_, "unexpected end of expression");
    const char c = src_[pos_];
    if (starts_number()) return Expr::constant(number());
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      skip_ws();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string_view ident = src_.substr(start, pos_ - start);
      if (ident == "x") return Expr::variable();
      if (ident == "ln" || ident == "exp" || ident == "abs") {
        skip_ws();
        expect('(');
        Expr inner = expr();
        skip_ws();
        expect(')');
        if (ident == "ln") return Expr::ln(std::move(inner));
        if (ident == "exp") return Expr::exp(std::move(inner));
        return Expr::abs(std::move(inner));
      }
      throw ParseError(start, "unknown identifier '" + std::string(ident) + "'");
    }
    throw ParseError(pos_, std::string("expected a number, 'x', '(' or a function, found '") + c + "'");
  }

  bool starts_number() const {
    std::size_t p = pos_;
    if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
    if (p >= src_.size()) return false;
    if (std::isdigit(static_cast<unsigned char>(src_[p]))) return true;
    return src_[p] == '.' && p + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p + 1]));
  }

  double number() {
    const std::size_t start = pos_;
    if (src_[pos_] == '+' || src_[pos_] == '-') ++pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw ParseError(start, "malformed number");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const std::size_t save = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = save;  // not an exponent; leave 'e' for the caller to reject
    }
    std::size_t from = start;
    if (src_[from] == '+') ++from;  // from_chars rejects a leading '+'
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + from, src_.data() + pos_, value);
    if (ec != std::errc{} || ptr != src_.data() + pos_ || !std::isfinite(value)) {
      throw ParseError(start, "number out of range");
    }
    return value;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ == src_.size()) throw ParseError(pos_, std::string("expected '") + c + "' before end of expression");
      throw ParseError(pos_, std::string("expected '") + c + "', found '" + src_[pos_] + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view source) { return Parser(source).run(); }

// ---------------------------------------------------------------------------
// Differentiation

namespace {

bool is_const(const Expr& e, double v) { return e.kind() == Expr::Kind::Constant && e.literal() == v; }
bool is_const(const Expr& e) { return e.kind() == Expr::Kind::Constant; }

Expr fold_or(double v, Expr fallback) { return std::isfinite(v) ? Expr::constant(v) : std::move(fallback); }

Expr s_add(Expr l, Expr r) {
  if (is_const(l, 0.0)) return r;
  if (is_const(r, 0.0)) return l;
  if (is_const(l) && is_const(r)) return fold_or(l.literal() + r.literal(), Expr::add(l, r));
  return Expr::add(std::move(l), std::move(r));
}

Expr s_mul(Expr l, Expr r) {
  if (is_const(l, 0.0) || is_const(r, 0.0)) return Expr::constant(0.0);
  if (is_const(l, 1.0)) return r;
  if (is_const(r, 1.0)) return l;
  if (is_const(l) && is_const(r)) return fold_or(l.literal() * r.literal(), Expr::mul(l, r));
  if (is_const(r)) return Expr::mul(std::move(r), std::move(l));  // constants lead
  return Expr::mul(std::move(l), std::move(r));
}

Expr s_sub(Expr l, Expr r) {
  if (is_const(r, 0.0)) return l;
  if (is_const(l) && is_const(r)) return fold_or(l.literal() - r.literal(), Expr::sub(l, r));
  if (is_const(l, 0.0)) return s_mul(Expr::constant(-1.0), std::move(r));
  return Expr::sub(std::move(l), std::move(r));
}

Expr s_div(Expr l, Expr r) {
  if (is_const(l, 0.0)) return Expr::constant(0.0);
  if (is_const(r, 1.0)) return l;
  return Expr::div(std::move(l), std::move(r));
}

Expr s_pow(Expr base, double e) {
  if (e == 0.0) return Expr::constant(1.0);
  if (e == 1.0) return base;
  return Expr::pow(std::move(base), e);
}

}  // namespace

Expr differentiate(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Constant:
      return Expr::constant(0.0);
    case K::Variable:
      return Expr::constant(1.0);
    case K::Add:
      return s_add(differentiate(e.lhs()), differentiate(e.rhs()));
    case K::Sub:
      return s_sub(differentiate(e.lhs()), differentiate(e.rhs()));
    case K::Mul:
      return s_add(s_mul(differentiate(e.lhs()), e.rhs()), s_mul(e.lhs(), differentiate(e.rhs())));
    case K::Div: {
      const Expr& u = e.lhs();
      const Expr& v = e.rhs();
      if (e.sign_form()) return Expr::constant(0.0);  // derivative of sign(u) away from its jump
      return s_div(s_sub(s_mul(differentiate(u), v), s_mul(u, differentiate(v))), s_pow(v, 2.0));
    }
    case K::Pow: {
      const double c = e.literal();
      return s_mul(s_mul(Expr::constant(c), s_pow(e.lhs(), c - 1.0)), differentiate(e.lhs()));
    }
    case K::Ln:
      return s_div(differentiate(e.arg()), e.arg());
    case K::Exp:
      return s_mul(e, differentiate(e.arg()));
    case K::Abs:
      return s_mul(Expr::sign_quotient(e.arg()), differentiate(e.arg()));
  }
  throw std::logic_error("unknown expression node");
}

// ---------------------------------------------------------------------------
// Domain checking

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

class DomainSampler {
 public:
  DomainSampler(const Interval& iv, int samples) {
    if (samples < 2) samples = 2;
    xs_.resize(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      xs_[static_cast<std::size_t>(i)] = iv.a() + iv.width() * (static_cast<double>(i) / (samples - 1));
    }
    xs_.back() = iv.b();
  }

  std::vector<double> values(const Expr& e) {
    using K = Expr::Kind;
    const std::size_t n = xs_.size();
    std::vector<double> out(n, kNaN);
    switch (e.kind()) {
      case K::Constant:
        std::fill(out.begin(), out.end(), e.literal());
        return out;
      case K::Variable:
        return xs_;
      case K::Add:
      case K::Sub:
      case K::Mul:
      case K::Div: {
        auto l = values(e.lhs());
        auto r = values(e.rhs());
        const bool sign_form = e.sign_form();
        if (e.kind() == K::Div && !sign_form) require_nonvanishing(e, r, "divisor vanishes");
        for (std::size_t i = 0; i < n; ++i) {
          if (std::isnan(l[i]) || std::isnan(r[i])) continue;
          switch (e.kind()) {
            case K::Add: out[i] = l[i] + r[i]; break;
            case K::Sub: out[i] = l[i] - r[i]; break;
            case K::Mul: out[i] = l[i] * r[i]; break;
            default: out[i] = r[i] == 0.0 ? kNaN : l[i] / r[i]; break;
          }
        }
        break;
      }
      case K::Pow: {
        auto base = values(e.lhs());
        const double c = e.literal();
        if (!is_integer(c)) {
          for (std::size_t i = 0; i < n; ++i) {
            if (base[i] < 0.0) {
              report(e, "negative base with non-integer exponent", xs_[i]);
              break;
            }
          }
        }
        if (c < 0.0) require_nonvanishing(e, base, "zero base with negative exponent");
        for (std::size_t i = 0; i < n; ++i) {
          if (std::isnan(base[i])) continue;
          if ((base[i] < 0.0 && !is_integer(c)) || (base[i] == 0.0 && c < 0.0)) continue;
          out[i] = std::pow(base[i], c);
        }
        break;
      }
      case K::Ln: {
        auto arg = values(e.arg());
        for (std::size_t i = 0; i < n; ++i) {
          if (!std::isnan(arg[i]) && arg[i] <= 0.0) {
            report(e, "ln needs a positive argument", xs_[i]);
            break;
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (arg[i] > 0.0) out[i] = std::log(arg[i]);
        }
        break;
      }
      case K::Exp: {
        auto arg = values(e.arg());
        for (std::size_t i = 0; i < n; ++i) {
          if (!std::isnan(arg[i])) out[i] = std::exp(arg[i]);
        }
        break;
      }
      case K::Abs: {
        auto arg = values(e.arg());
        for (std::size_t i = 0; i < n; ++i) out[i] = std::fabs(arg[i]);
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (std::isinf(out[i])) {
        report(e, "non-finite value", xs_[i]);
        break;
      }
    }
    for (auto& v : out) {
      if (!std::isfinite(v)) v = kNaN;
    }
    return out;
  }

  std::vector<DomainViolation> take() { return std::move(violations_); }

 private:
  void require_nonvanishing(const Expr& e, const std::vector<double>& v, const char* reason) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (std::isnan(v[i])) continue;
      if (v[i] == 0.0) {
        report(e, reason, xs_[i]);
        return;
      }
      if (i + 1 < v.size() && !std::isnan(v[i + 1]) && (v[i] > 0.0) != (v[i + 1] > 0.0)) {
        report(e, reason, 0.5 * (xs_[i] + xs_[i + 1]));
        return;
      }
    }
  }

  void report(const Expr& e, const char* reason, double x) {
    violations_.push_back(DomainViolation{e.str(), reason, x});
  }

  std::vector<double> xs_;
  std::vector<DomainViolation> violations_;
};

}  // namespace

DomainReport domain_check(const Expr& e, const Interval& interval, int samples) {
  DomainSampler sampler(interval, samples);
  sampler.values(e);
  return DomainReport{sampler.take()};
}

}  // namespace hhb
