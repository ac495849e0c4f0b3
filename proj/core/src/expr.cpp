#include <bsfan/errors.hpp>
#include <bsfan/expr.hpp>

#include <cctype>
#include <functional>

namespace bsfan {

namespace {

constexpr unsigned kMaxExponent = 1000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<Expr> parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t at) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->position = at;
    return e;
  }

  static std::unique_ptr<Expr> binary(Expr::Kind k, std::size_t at, std::unique_ptr<Expr> a,
                                      std::unique_ptr<Expr> b) {
    auto e = node(k, at);
    e->args.push_back(std::move(a));
    e->args.push_back(std::move(b));
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) lhs = binary(Expr::Kind::add, at, std::move(lhs), term());
      else if (accept('-')) lhs = binary(Expr::Kind::sub, at, std::move(lhs), term());
      else return lhs;
    }
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) lhs = binary(Expr::Kind::mul, at, std::move(lhs), unary());
      else if (accept('/')) lhs = binary(Expr::Kind::div, at, std::move(lhs), unary());
      else return lhs;
    }
  }

  std::unique_ptr<Expr> unary() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) {
      auto e = node(Expr::Kind::neg, at);
      e->args.push_back(unary());
      return e;
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = atom();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a nonnegative integer exponent", start);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    const unsigned k = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    if (k > kMaxExponent) throw ParseError("exponent too large", start);
    auto e = node(Expr::Kind::pow, at);
    e->exponent = k;
    e->args.push_back(std::move(base));
    return e;
  }

  std::unique_ptr<Expr> atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (accept('(')) {
      auto e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto e = node(Expr::Kind::number, at);
      e->value = Rational(Integer(std::string(text_.substr(at, pos_ - at))));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto e = node(Expr::Kind::variable, at);
      e->name = std::string(text_.substr(at, pos_ - at));
      return e;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }
};

// Folds the tree into any ring-like value type.
template <class T>
T lower(const Expr& e, const std::function<T(const Rational&)>& number,
        const std::function<T(const Expr&)>& variable, const std::function<std::optional<Rational>(const T&)>& as_constant) {
  auto rec = [&](const Expr& x) { return lower<T>(x, number, variable, as_constant); };
  switch (e.kind) {
    case Expr::Kind::number: return number(e.value);
    case Expr::Kind::variable: return variable(e);
    case Expr::Kind::add: return rec(*e.args[0]) + rec(*e.args[1]);
    case Expr::Kind::sub: return rec(*e.args[0]) - rec(*e.args[1]);
    case Expr::Kind::neg: return -rec(*e.args[0]);
    case Expr::Kind::mul: return rec(*e.args[0]) * rec(*e.args[1]);
    case Expr::Kind::div: {
      const auto c = as_constant(rec(*e.args[1]));
      if (!c) throw ParseError("division by a non-constant", e.position);
      if (*c == 0) throw ParseError("division by zero", e.position);
      return rec(*e.args[0]) * Rational(1 / *c);
    }
    case Expr::Kind::pow: {
      const T base = rec(*e.args[0]);
      T acc = number(1);
      for (unsigned i = 0; i < e.exponent; ++i) acc = acc * base;
      return acc;
    }
  }
  throw ParseError("malformed expression", e.position);
}

std::optional<Rational> dop_constant(const DOp& p) {
  if (p.is_zero()) return Rational(0);
  if (p.size() != 1) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  if (e.total() != 0) return std::nullopt;
  return c;
}

std::string coefficient_prefix(const Rational& c, bool first, bool bare) {
  std::string out;
  Rational a = abs(c);
  if (c < 0) out += '-';
  else if (!first) out += '+';
  if (bare || a != 1) {
    out += to_string(a);
    if (!bare) out += '*';
  }
  return out;
}

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text) { return Parser(text).parse(); }

std::vector<std::string> variable_names(RingSignature sig) {
  std::vector<std::string> names(sig.width());
  for (int i = 0; i < sig.n; ++i) {
    names[sig.x(i)] = "x" + std::to_string(i + 1);
    names[sig.dx(i)] = "dx" + std::to_string(i + 1);
  }
  for (int j = 0; j < sig.p; ++j) {
    names[sig.t(j)] = "t" + std::to_string(j + 1);
    names[sig.dt(j)] = "dt" + std::to_string(j + 1);
  }
  names[sig.z()] = "z";
  return names;
}

DOp parse_operator(std::string_view text, RingSignature sig) {
  const auto tree = parse_expression(text);
  const auto names = variable_names(sig);
  std::function<DOp(const Rational&)> number = [&](const Rational& c) { return DOp::constant(sig, c); };
  std::function<DOp(const Expr&)> variable = [&](const Expr& e) {
    if (e.name == "z" && !sig.homogenized())
      throw ParseError("z is not available in the Weyl ring", e.position);
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] != e.name) continue;
      Exponent ex(sig.width());
      ex[i] = 1;
      return DOp::monomial(sig, ex);
    }
    throw ParseError("unknown variable '" + e.name + "'", e.position);
  };
  std::function<std::optional<Rational>(const DOp&)> as_constant = dop_constant;
  return lower<DOp>(*tree, number, variable, as_constant);
}

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names) {
  const auto tree = parse_expression(text);
  const std::size_t vars = names.size();
  std::function<Polynomial(const Rational&)> number = [&](const Rational& c) { return Polynomial::constant(vars, c); };
  std::function<Polynomial(const Expr&)> variable = [&](const Expr& e) {
    for (std::size_t i = 0; i < vars; ++i)
      if (names[i] == e.name) return Polynomial::variable(vars, i);
    throw ParseError("unknown variable '" + e.name + "'", e.position);
  };
  std::function<std::optional<Rational>(const Polynomial&)> as_constant =
      [](const Polynomial& p) -> std::optional<Rational> {
    if (!p.is_constant()) return std::nullopt;
    return p.constant_term();
  };
  return lower<Polynomial>(*tree, number, variable, as_constant);
}

std::string format_operator(const DOp& p, const std::optional<OrderDescriptor>& ord) {
  if (p.is_zero()) return "0";
  const RingSignature sig = p.signature();
  const auto names = variable_names(sig);
  const OrderDescriptor o = ord ? *ord : OrderDescriptor::base0(sig.n, sig.p);
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(p, o)) {
    const bool bare = e.total() == 0;
    out += coefficient_prefix(c, first, bare);
    first = false;
    bool lead = true;
    for (std::size_t i = 0; i < e.width(); ++i) {
      if (e[i] == 0) continue;
      if (!lead) out += '*';
      lead = false;
      out += names[i];
      if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
  }
  return out;
}

std::vector<std::string> x_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::vector<std::string> s_names(int p) {
  std::vector<std::string> v;
  for (int j = 1; j <= p; ++j) v.push_back("s" + std::to_string(j));
  return v;
}

}  // namespace bsfan
