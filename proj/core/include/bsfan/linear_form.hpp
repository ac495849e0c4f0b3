#pragma once

#include <bsfan/dop.hpp>
#include <bsfan/exponent.hpp>
#include <bsfan/rational.hpp>

#include <optional>
#include <span>
#include <vector>

namespace bsfan {

/// L(alpha, mu, beta, nu, k) = e . (alpha, mu) + f . (beta, nu); z is ignored.
///
/// The family U is cut out by e_i <= 0 and e_i + f_i >= 0; the sub-family U_V
/// consists of the sums l_1 V_1 + ... + l_p V_p with l_j >= 0, where
/// V_j(e) = nu_j - mu_j is the Kashiwara-Malgrange weight of t_j.
class LinearForm {
 public:
  LinearForm(int n, int p, std::vector<Rational> e, std::vector<Rational> f);

  /// sum_j l[j] V_j. Requires l.size() == p and l[j] >= 0.
  static LinearForm v_form(int n, std::span<const Rational> l);
  static LinearForm v_form(int n, std::initializer_list<Rational> l);
  /// V_j with 0-based j.
  static LinearForm v_j(int n, int p, int j);

  int n() const noexcept { return n_; }
  int p() const noexcept { return p_; }
  const std::vector<Rational>& e() const noexcept { return e_; }
  const std::vector<Rational>& f() const noexcept { return f_; }

  Rational value(const Exponent& u) const;

  bool in_u() const;
  bool in_uv() const;
  /// (l_1, ..., l_p) when the form lies in U_V.
  std::optional<std::vector<Rational>> v_coordinates() const;

  /// L(w) = sum l_j w_j for w in Z^p (U_V forms only).
  Rational evaluate_shift(std::span<const std::int64_t> w) const;

  bool operator==(const LinearForm&) const = default;

 private:
  int n_;
  int p_;
  std::vector<Rational> e_;
  std::vector<Rational> f_;
};

/// ord^L(P) = max L(ND(P)); std::nullopt encodes -infinity (P = 0).
using OrderValue = std::optional<Rational>;

OrderValue ord_L(const DOp& p, const LinearForm& L);

/// Sum of the terms of p on which L attains ord^L(p). Zero maps to zero.
DOp symbol_L(const DOp& p, const LinearForm& L);

/// ord <= bound, with -infinity below everything.
inline bool ord_le(const OrderValue& ord, const Rational& bound) {
  return !ord || *ord <= bound;
}
/// a < b on Q u {-infinity}.
bool ord_less(const OrderValue& a, const OrderValue& b);

}  // namespace bsfan
