#include <bsfan/errors.hpp>
#include <bsfan/exponent.hpp>

#include <algorithm>

namespace bsfan {

std::uint64_t Exponent::total() const noexcept {
  std::uint64_t s = 0;
  for (auto v : e_) s += v;
  return s;
}

bool Exponent::divides(const Exponent& other) const noexcept {
  if (e_.size() != other.e_.size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Exponent Exponent::operator+(const Exponent& other) const {
  if (e_.size() != other.e_.size()) throw SignatureMismatch("exponent width mismatch");
  Exponent r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
  return r;
}

Exponent Exponent::operator-(const Exponent& other) const {
  if (!other.divides(*this)) throw InvalidArgument("exponent difference would be negative");
  Exponent r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= other.e_[i];
  return r;
}

Exponent Exponent::lcm(const Exponent& a, const Exponent& b) {
  if (a.width() != b.width()) throw SignatureMismatch("exponent width mismatch");
  Exponent r(a);
  for (std::size_t i = 0; i < a.width(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

}  // namespace bsfan
