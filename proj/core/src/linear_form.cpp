#include <bsfan/errors.hpp>
#include <bsfan/linear_form.hpp>

namespace bsfan {

LinearForm::LinearForm(int n, int p, std::vector<Rational> e, std::vector<Rational> f)
    : n_(n), p_(p), e_(std::move(e)), f_(std::move(f)) {
  const auto m = static_cast<std::size_t>(n + p);
  if (n < 1 || p < 1) throw InvalidArgument("linear form needs n >= 1 and p >= 1");
  if (e_.size() != m || f_.size() != m) throw InvalidArgument("linear form weight length mismatch");
}

LinearForm LinearForm::v_form(int n, std::span<const Rational> l) {
  const int p = static_cast<int>(l.size());
  std::vector<Rational> e(static_cast<std::size_t>(n + p), 0);
  std::vector<Rational> f(static_cast<std::size_t>(n + p), 0);
  for (int j = 0; j < p; ++j) {
    if (l[static_cast<std::size_t>(j)] < 0) throw InvalidArgument("U_V coordinates must be nonnegative");
    e[static_cast<std::size_t>(n + j)] = -l[static_cast<std::size_t>(j)];
    f[static_cast<std::size_t>(n + j)] = l[static_cast<std::size_t>(j)];
  }
  return LinearForm(n, p, std::move(e), std::move(f));
}

LinearForm LinearForm::v_form(int n, std::initializer_list<Rational> l) {
  std::vector<Rational> v(l);
  return v_form(n, std::span<const Rational>(v));
}

LinearForm LinearForm::v_j(int n, int p, int j) {
  if (j < 0 || j >= p) throw InvalidArgument("V_j index out of range");
  std::vector<Rational> l(static_cast<std::size_t>(p), 0);
  l[static_cast<std::size_t>(j)] = 1;
  return v_form(n, std::span<const Rational>(l));
}

Rational LinearForm::value(const Exponent& u) const {
  const auto m = static_cast<std::size_t>(n_ + p_);
  if (u.width() != 2 * m + 1) throw SignatureMismatch("exponent width does not match form");
  Rational v = 0;
  for (std::size_t q = 0; q < m; ++q) {
    if (u[q] != 0 && e_[q] != 0) v += e_[q] * u[q];
    if (u[m + q] != 0 && f_[q] != 0) v += f_[q] * u[m + q];
  }
  return v;
}

bool LinearForm::in_u() const {
  for (std::size_t q = 0; q < e_.size(); ++q)
    if (e_[q] > 0 || e_[q] + f_[q] < 0) return false;
  return true;
}

bool LinearForm::in_uv() const { return v_coordinates().has_value(); }

std::optional<std::vector<Rational>> LinearForm::v_coordinates() const {
  const auto n = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < n; ++i)
    if (e_[i] != 0 || f_[i] != 0) return std::nullopt;
  std::vector<Rational> l;
  for (std::size_t j = 0; j < static_cast<std::size_t>(p_); ++j) {
    if (f_[n + j] < 0 || e_[n + j] != -f_[n + j]) return std::nullopt;
    l.push_back(f_[n + j]);
  }
  return l;
}

Rational LinearForm::evaluate_shift(std::span<const std::int64_t> w) const {
  auto l = v_coordinates();
  if (!l) throw InvalidArgument("form is not in U_V");
  if (w.size() != l->size()) throw InvalidArgument("shift length must equal p");
  Rational v = 0;
  for (std::size_t j = 0; j < w.size(); ++j) v += (*l)[j] * Rational(static_cast<long>(w[j]));
  return v;
}

OrderValue ord_L(const DOp& p, const LinearForm& L) {
  OrderValue best;
  for (const auto& [e, c] : p.terms()) {
    Rational v = L.value(e);
    if (!best || v > *best) best = std::move(v);
  }
  return best;
}

DOp symbol_L(const DOp& p, const LinearForm& L) {
  DOp out(p.signature());
  const auto top = ord_L(p, L);
  if (!top) return out;
  for (const auto& [e, c] : p.terms())
    if (L.value(e) == *top) out.add_term(e, c);
  return out;
}

bool ord_less(const OrderValue& a, const OrderValue& b) {
  if (!b) return false;
  if (!a) return true;
  return *a < *b;
}

}  // namespace bsfan
