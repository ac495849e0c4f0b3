#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bsfan {

/// Multi-index (alpha, mu, beta, nu, k) of a normal-ordered monomial
/// x^alpha t^mu dx^beta dt^nu z^k. Layout is fixed by RingSignature.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t width) : e_(width, 0) {}
  explicit Exponent(std::vector<std::uint32_t> entries) : e_(std::move(entries)) {}
  Exponent(std::initializer_list<std::uint32_t> entries) : e_(entries) {}

  std::size_t width() const noexcept { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& entries() const noexcept { return e_; }

  std::uint64_t total() const noexcept;

  /// Componentwise this <= other, i.e. other lies in this + N^width.
  bool divides(const Exponent& other) const noexcept;

  Exponent operator+(const Exponent& other) const;
  /// Componentwise difference; requires other.divides(*this).
  Exponent operator-(const Exponent& other) const;

  static Exponent lcm(const Exponent& a, const Exponent& b);

  /// Lexicographic on raw entries; storage order only, not a monomial order.
  auto operator<=>(const Exponent&) const = default;
  bool operator==(const Exponent&) const = default;

 private:
  std::vector<std::uint32_t> e_;
};

}  // namespace bsfan
