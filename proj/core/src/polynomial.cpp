#include <bsfan/errors.hpp>
#include <bsfan/polynomial.hpp>

#include <algorithm>
#include <numeric>

namespace bsfan {

Polynomial Polynomial::constant(std::size_t vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(Monomial(vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t i) {
  if (i >= vars) throw InvalidArgument("variable index out of range");
  Polynomial p(vars);
  Monomial m(vars, 0);
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](auto v) { return v == 0; }));
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial(vars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != vars_) throw SignatureMismatch("monomial length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max<std::uint64_t>(d, std::accumulate(m.begin(), m.end(), std::uint64_t{0}));
  return d;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= vars_) throw InvalidArgument("variable index out of range");
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    --d[i];
    out.add_term(d, c * m[i]);
  }
  return out;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::compose(std::span<const Polynomial> values) const {
  if (values.size() != vars_) throw InvalidArgument("compose needs one value per variable");
  const std::size_t target = values.empty() ? 0 : values[0].vars();
  for (const auto& v : values)
    if (v.vars() != target) throw SignatureMismatch("substituted polynomials differ in ring");
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < vars_; ++i)
      if (m[i] > 0) term = term * values[i].pow(m[i]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.vars_ != vars_) throw SignatureMismatch("polynomials live in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.vars_ != vars_) throw SignatureMismatch("polynomials live in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw SignatureMismatch("polynomials live in different rings");
  Polynomial out(a.vars_);
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) {
      Polynomial::Monomial m(m1);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
      out.add_term(m, c1 * c2);
    }
  return out;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (names.size() != vars_) throw InvalidArgument("one name per variable required");
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto deg = [](const Monomial& m) { return std::accumulate(m.begin(), m.end(), std::uint64_t{0}); };
  std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    const auto da = deg(a->first), db = deg(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (m[i] > 1) mono += '^' + std::to_string(m[i]);
    }
    Rational a = abs(c);
    std::string body;
    if (mono.empty()) {
      body = bsfan::to_string(a);
    } else if (a == 1) {
      body = mono;
    } else {
      body = bsfan::to_string(a) + '*' + mono;
    }
    if (c < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    out += body;
    first = false;
  }
  return out;
}

}  // namespace bsfan
