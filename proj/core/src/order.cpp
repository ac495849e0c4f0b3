#include <bsfan/errors.hpp>
#include <bsfan/order.hpp>

#include <algorithm>

namespace bsfan {

namespace {

std::uint64_t space_total(const Exponent& u) {
  std::uint64_t s = 0;
  for (std::size_t q = 0; q + 1 < u.width(); ++q) s += u[q];
  return s;
}

std::uint64_t derivative_total(const Exponent& u) {
  const std::size_t m = (u.width() - 1) / 2;
  std::uint64_t s = 0;
  for (std::size_t q = m; q < 2 * m; ++q) s += u[q];
  return s;
}

std::uint64_t homogeneous_total(const Exponent& u) { return derivative_total(u) + u[u.width() - 1]; }

std::strong_ordering compare_l_value(const LinearForm& L, const Exponent& u, const Exponent& v) {
  const Rational a = L.value(u);
  const Rational b = L.value(v);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<std::int64_t> scale_weights(const LinearForm& L) {
  Integer den = 1;
  for (const auto* w : {&L.e(), &L.f()})
    for (const auto& r : *w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  std::vector<std::int64_t> out;
  for (const auto* w : {&L.e(), &L.f()})
    for (const auto& r : *w) {
      Integer s = r.get_num() * (den / r.get_den());
      if (!s.fits_slong_p()) throw InvalidArgument("linear form weights too large");
      out.push_back(s.get_si());
    }
  return out;
}

std::string coords(const LinearForm& L) {
  auto l = L.v_coordinates();
  std::string s;
  if (l) {
    for (std::size_t j = 0; j < l->size(); ++j) {
      if (j) s += ',';
      s += to_string((*l)[j]);
    }
    return s;
  }
  s = "e=";
  for (std::size_t j = 0; j < L.e().size(); ++j) s += (j ? "," : "") + to_string(L.e()[j]);
  s += ";f=";
  for (std::size_t j = 0; j < L.f().size(); ++j) s += (j ? "," : "") + to_string(L.f()[j]);
  return s;
}

}  // namespace

std::strong_ordering compare_base0(const Exponent& u, const Exponent& v) {
  if (auto c = space_total(u) <=> space_total(v); c != 0) return c;
  const std::size_t zi = u.width() - 1;
  for (std::size_t q = zi; q-- > 0;)
    if (auto c = u[q] <=> v[q]; c != 0) return c;
  return u[zi] <=> v[zi];
}

std::strong_ordering compare_L(const LinearForm& L, const Exponent& u, const Exponent& v) {
  if (auto c = compare_l_value(L, u, v); c != 0) return c;
  if (auto c = derivative_total(u) <=> derivative_total(v); c != 0) return c;
  return compare_base0(v, u);
}

std::strong_ordering compare_Lh(const LinearForm& L, const Exponent& u, const Exponent& v) {
  if (auto c = homogeneous_total(u) <=> homogeneous_total(v); c != 0) return c;
  return compare_L(L, u, v);
}

std::strong_ordering compare_tri(const LinearForm& L, const LinearForm& l_sigma, const Exponent& u,
                                 const Exponent& v) {
  if (auto c = homogeneous_total(u) <=> homogeneous_total(v); c != 0) return c;
  if (auto c = compare_l_value(L, u, v); c != 0) return c;
  return compare_L(l_sigma, u, v);
}

OrderDescriptor OrderDescriptor::base0(int n, int p) { return {Kind::base0, n, p}; }

OrderDescriptor OrderDescriptor::degree_first(int n, int p) { return {Kind::degree_base0, n, p}; }

OrderDescriptor OrderDescriptor::l_order(LinearForm L) {
  OrderDescriptor d(Kind::l_order, L.n(), L.p());
  d.w_form_ = scale_weights(L);
  d.form_ = std::move(L);
  return d;
}

OrderDescriptor OrderDescriptor::lh_order(LinearForm L) {
  OrderDescriptor d(Kind::lh_order, L.n(), L.p());
  d.w_form_ = scale_weights(L);
  d.form_ = std::move(L);
  return d;
}

OrderDescriptor OrderDescriptor::tri(LinearForm L, LinearForm l_sigma) {
  if (L.n() != l_sigma.n() || L.p() != l_sigma.p())
    throw SignatureMismatch("forms of a tri order must share n and p");
  OrderDescriptor d(Kind::tri, L.n(), L.p());
  d.w_form_ = scale_weights(L);
  d.w_tiebreak_ = scale_weights(l_sigma);
  d.form_ = std::move(L);
  d.tiebreak_ = std::move(l_sigma);
  return d;
}

std::int64_t OrderDescriptor::scaled(const std::vector<std::int64_t>& w, const Exponent& u) const {
  std::int64_t s = 0;
  const std::size_t half = w.size();
  for (std::size_t q = 0; q < half; ++q)
    if (w[q] != 0) s += w[q] * static_cast<std::int64_t>(u[q]);
  return s;
}

std::strong_ordering OrderDescriptor::compare_l_tail(const std::vector<std::int64_t>& w,
                                                     const Exponent& u, const Exponent& v) const {
  if (auto c = scaled(w, u) <=> scaled(w, v); c != 0) return c;
  if (auto c = derivative_total(u) <=> derivative_total(v); c != 0) return c;
  return compare_base0(v, u);
}

std::strong_ordering OrderDescriptor::compare(const Exponent& u, const Exponent& v) const {
  switch (kind_) {
    case Kind::base0:
      return compare_base0(u, v);
    case Kind::degree_base0:
      if (auto c = homogeneous_total(u) <=> homogeneous_total(v); c != 0) return c;
      return compare_base0(u, v);
    case Kind::l_order:
      return compare_l_tail(w_form_, u, v);
    case Kind::lh_order:
      if (auto c = homogeneous_total(u) <=> homogeneous_total(v); c != 0) return c;
      return compare_l_tail(w_form_, u, v);
    case Kind::tri:
      if (auto c = homogeneous_total(u) <=> homogeneous_total(v); c != 0) return c;
      if (auto c = scaled(w_form_, u) <=> scaled(w_form_, v); c != 0) return c;
      return compare_l_tail(w_tiebreak_, u, v);
  }
  return std::strong_ordering::equal;
}

std::string OrderDescriptor::describe() const {
  switch (kind_) {
    case Kind::base0:
      return "base0";
    case Kind::degree_base0:
      return "deg";
    case Kind::l_order:
      return "V:" + coords(*form_);
    case Kind::lh_order:
      return "Vh:" + coords(*form_);
    case Kind::tri:
      return "tri:" + coords(*form_) + "@" + coords(*tiebreak_);
  }
  return {};
}

Exponent privileged_exponent(const DOp& p, const OrderDescriptor& ord) {
  if (p.is_zero()) throw InvalidArgument("privileged exponent of the zero operator");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || ord.less(*best, e)) best = &e;
  return *best;
}

Rational leading_coefficient(const DOp& p, const OrderDescriptor& ord) {
  return p.coefficient(privileged_exponent(p, ord));
}

std::vector<std::pair<Exponent, Rational>> sorted_terms(const DOp& p, const OrderDescriptor& ord) {
  std::vector<std::pair<Exponent, Rational>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
  return out;
}

}  // namespace bsfan
