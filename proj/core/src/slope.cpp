#include <bsfan/errors.hpp>
#include <bsfan/slope.hpp>

#include <numeric>

namespace bsfan {

SlopeDirection::SlopeDirection(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw InvalidArgument("slope direction must lie in the closed quadrant");
  if (a == 0 && b == 0) throw InvalidArgument("slope direction must be nonzero");
  const std::int64_t g = std::gcd(a, b);
  a_ = a / g;
  b_ = b / g;
}

LinearForm SlopeDirection::form(int n, int p) const {
  if (p == 1) {
    if (b_ != 0) throw InvalidArgument("p = 1 only has the direction V_1");
    return LinearForm::v_form(n, {Rational(static_cast<long>(a_))});
  }
  if (p != 2) throw InvalidArgument("slope directions need p <= 2");
  return LinearForm::v_form(n, {Rational(static_cast<long>(a_)), Rational(static_cast<long>(b_))});
}

std::int64_t SlopeDirection::evaluate(std::span<const std::int64_t> w) const {
  if (w.empty()) throw InvalidArgument("empty shift");
  return a_ * w[0] + (w.size() > 1 ? b_ * w[1] : 0);
}

std::strong_ordering operator<=>(const SlopeDirection& l, const SlopeDirection& r) {
  // b1/a1 vs b2/a2 with b/0 = +infinity; directions are primitive, so equal slopes mean equal.
  return l.b_ * r.a_ <=> r.b_ * l.a_;
}

std::string SlopeDirection::to_string() const {
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

SlopeDirection direction_of(const LinearForm& L) {
  auto l = L.v_coordinates();
  if (!l) throw InvalidArgument("form is not in U_V");
  if (l->size() > 2) throw InvalidArgument("slope directions need p <= 2");
  Integer den = 1;
  for (const auto& r : *l) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  std::vector<std::int64_t> v;
  for (const auto& r : *l) {
    Integer s = r.get_num() * (den / r.get_den());
    if (!s.fits_slong_p()) throw InvalidArgument("form coordinates too large");
    v.push_back(s.get_si());
  }
  if (v.size() == 1) v.push_back(0);
  return SlopeDirection(v[0], v[1]);
}

}  // namespace bsfan
