#pragma once

#include <bsfan/linear_form.hpp>
#include <bsfan/rational.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>

namespace bsfan {

/// Primitive integral direction L = a V_1 + b V_2 in the closed quadrant
/// (p = 2), ordered by slope b / a with b / 0 = +infinity.
class SlopeDirection {
 public:
  /// Normalizes by gcd; throws InvalidArgument when a = b = 0 or a, b < 0.
  SlopeDirection(std::int64_t a, std::int64_t b);

  static SlopeDirection v1() { return {1, 0}; }
  static SlopeDirection v2() { return {0, 1}; }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }

  /// a V_1 + b V_2 (p = 2), or a V_1 when p = 1 (requires b = 0).
  LinearForm form(int n, int p = 2) const;
  /// L(w) = a w_1 + b w_2.
  std::int64_t evaluate(std::span<const std::int64_t> w) const;

  /// Comparison by slope via cross-multiplication.
  friend std::strong_ordering operator<=>(const SlopeDirection& l, const SlopeDirection& r);
  friend bool operator==(const SlopeDirection& l, const SlopeDirection& r) = default;

  std::string to_string() const;

 private:
  std::int64_t a_;
  std::int64_t b_;
};

/// The primitive direction of a U_V form with p = 2 (rational coordinates
/// scaled to integers). Throws InvalidArgument for forms outside U_V or zero.
SlopeDirection direction_of(const LinearForm& L);

}  // namespace bsfan
