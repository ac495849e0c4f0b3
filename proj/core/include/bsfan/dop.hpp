#pragma once

#include <bsfan/exponent.hpp>
#include <bsfan/rational.hpp>
#include <bsfan/signature.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace bsfan {

/// A differential operator with polynomial coefficients over Q, stored in
/// normal order x^alpha t^mu dx^beta dt^nu z^k. Zero coefficients are never
/// stored, so two operators are equal iff their term maps are equal.
///
/// DOp is a value type; every operation below is a pure function.
class DOp {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit DOp(RingSignature sig);

  static DOp constant(RingSignature sig, const Rational& c);
  static DOp monomial(RingSignature sig, Exponent e, const Rational& c = 1);

  // Single generators (0-based indices).
  static DOp x(RingSignature sig, int i);
  static DOp t(RingSignature sig, int j);
  static DOp dx(RingSignature sig, int i);
  static DOp dt(RingSignature sig, int j);
  static DOp z(RingSignature sig);

  const RingSignature& signature() const noexcept { return sig_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Exponent& e) const;

  /// Adds c * X^e, dropping the entry if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  /// True when every term has the same k + |beta| + |nu|; zero counts as homogeneous.
  bool is_homogeneous() const;
  /// Max of k + |beta| + |nu| over the terms; 0 for the zero operator.
  std::uint64_t degree() const;
  /// Max of |beta| + |nu| over the terms (the deg(P) used by homogenization).
  std::uint64_t derivative_degree() const;
  /// True when no term carries z.
  bool z_free() const;

  DOp operator-() const;
  DOp& operator+=(const DOp& other);
  DOp& operator-=(const DOp& other);
  DOp& operator*=(const Rational& c);

  friend DOp operator+(DOp a, const DOp& b) { return a += b; }
  friend DOp operator-(DOp a, const DOp& b) { return a -= b; }
  friend DOp operator*(DOp a, const Rational& c) { return a *= c; }
  friend DOp operator*(const Rational& c, DOp a) { return a *= c; }
  friend DOp operator*(const DOp& a, const DOp& b);

  bool operator==(const DOp& other) const = default;
  /// Storage-order comparison, for canonical sorting of operator sets.
  bool operator<(const DOp& other) const { return terms_ < other.terms_; }

 private:
  RingSignature sig_;
  TermMap terms_;
};

/// Normal-ordered product. In the homogenized ring every commutation
/// dx * x = x * dx + z contributes a z; in the Weyl ring it contributes 1.
/// Throws SignatureMismatch when the operands live in different rings.
DOp multiply(const DOp& a, const DOp& b);

/// X^e * b for a single monomial, the workhorse of division.
DOp multiply_monomial(const Exponent& e, const Rational& c, const DOp& b);

/// h(P) = sum c_beta dx^beta z^(d - |beta|), d = deg(P). Input must be
/// nonzero and z-free; output lives in the homogenized ring.
DOp homogenize(const DOp& p);

/// z -> 1. The result lives in the Weyl ring.
DOp specialize_z1(const DOp& h);

/// Re-tags a z-free operator into the requested ring without padding.
DOp embed(const DOp& p, Ring ring);

/// z^k * p (homogenized ring only).
DOp times_z(const DOp& p, std::uint32_t k);

/// Newton diagram: the support of the term map.
std::vector<Exponent> newton_diagram(const DOp& p);

}  // namespace bsfan
