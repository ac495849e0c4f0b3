#pragma once

#include <bsfan/rational.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace bsfan {

/// Commutative multivariate polynomial over Q in a fixed number of variables.
/// Used for the input functions f_j and for b(s).
class Polynomial {
 public:
  using Monomial = std::vector<std::uint32_t>;
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t vars = 0) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, const Rational& c);
  static Polynomial variable(std::size_t vars, std::size_t i);

  std::size_t vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  void add_term(const Monomial& m, const Rational& c);

  /// Total degree; 0 for the zero polynomial.
  std::uint64_t degree() const;

  Polynomial derivative(std::size_t i) const;
  Polynomial pow(std::uint32_t k) const;

  /// Substitutes values[i] for variable i; values.size() == vars().
  /// The result lives in the ring of the substituted polynomials.
  Polynomial compose(std::span<const Polynomial> values) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial&) const = default;

  /// Terms by descending total degree then descending lex; "s1*s2+s1+s2+1".
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t vars_;
  TermMap terms_;
};

}  // namespace bsfan
