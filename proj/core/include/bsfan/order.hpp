#pragma once

#include <bsfan/dop.hpp>
#include <bsfan/exponent.hpp>
#include <bsfan/linear_form.hpp>
#include <bsfan/signature.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace bsfan {

/// The fixed well-order <_0: graded lexicographic on (alpha, mu, beta, nu),
/// variable precedence x_1 < ... < x_n < t_1 < ... < t_p < dx_1 < ... < dt_p.
/// z breaks the remaining ties.
std::strong_ordering compare_base0(const Exponent& u, const Exponent& v);

/// <_L: L-value, then |beta| + |nu|, then reversed <_0.
std::strong_ordering compare_L(const LinearForm& L, const Exponent& u, const Exponent& v);

/// <_L^h: total (d, z)-degree k + |beta| + |nu| first, then <_L.
std::strong_ordering compare_Lh(const LinearForm& L, const Exponent& u, const Exponent& v);

/// The order used on boundary rays of a cone: degree, then L, then <_{L_sigma}.
std::strong_ordering compare_tri(const LinearForm& L, const LinearForm& l_sigma,
                                 const Exponent& u, const Exponent& v);

/// A total order on exponents, as a value. Rational weights are scaled to
/// integers once at construction so comparisons stay exact and cheap.
class OrderDescriptor {
 public:
  enum class Kind {
    base0,         ///< <_0
    degree_base0,  ///< k + |beta| + |nu|, then <_0; a global well-order
    l_order,       ///< <_L
    lh_order,      ///< <_L^h
    tri,           ///< the cone-boundary order (L, then <_{L_sigma})
  };

  static OrderDescriptor base0(int n, int p);
  static OrderDescriptor degree_first(int n, int p);
  static OrderDescriptor l_order(LinearForm L);
  static OrderDescriptor lh_order(LinearForm L);
  static OrderDescriptor tri(LinearForm L, LinearForm l_sigma);

  Kind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  int p() const noexcept { return p_; }
  const std::optional<LinearForm>& form() const noexcept { return form_; }
  const std::optional<LinearForm>& tiebreak() const noexcept { return tiebreak_; }

  std::strong_ordering compare(const Exponent& u, const Exponent& v) const;
  bool less(const Exponent& u, const Exponent& v) const { return compare(u, v) < 0; }

  /// True for orders that are well-orders on N^width (termination guaranteed).
  bool is_well_order() const noexcept {
    return kind_ == Kind::base0 || kind_ == Kind::degree_base0;
  }

  /// Compact text such as "Vh:1,0" or "tri:1,1@1,2" (U_V forms), used in reports.
  std::string describe() const;

  bool operator==(const OrderDescriptor& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && p_ == o.p_ && form_ == o.form_ &&
           tiebreak_ == o.tiebreak_;
  }

 private:
  OrderDescriptor(Kind kind, int n, int p) : kind_(kind), n_(n), p_(p) {}

  std::int64_t scaled(const std::vector<std::int64_t>& w, const Exponent& u) const;
  std::strong_ordering compare_l_tail(const std::vector<std::int64_t>& w, const Exponent& u,
                                      const Exponent& v) const;

  Kind kind_;
  int n_;
  int p_;
  std::optional<LinearForm> form_;
  std::optional<LinearForm> tiebreak_;
  std::vector<std::int64_t> w_form_;
  std::vector<std::int64_t> w_tiebreak_;
};

/// Strict-weak-ordering adaptor for ordered containers.
struct OrderLess {
  const OrderDescriptor* order;
  bool operator()(const Exponent& u, const Exponent& v) const { return order->less(u, v); }
};

/// exp_<(P) = max_< ND(P). Throws InvalidArgument for P = 0.
Exponent privileged_exponent(const DOp& p, const OrderDescriptor& ord);

/// Coefficient of the privileged monomial.
Rational leading_coefficient(const DOp& p, const OrderDescriptor& ord);

/// Terms of p sorted in descending order.
std::vector<std::pair<Exponent, Rational>> sorted_terms(const DOp& p, const OrderDescriptor& ord);

}  // namespace bsfan
