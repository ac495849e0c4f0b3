#pragma once

#include <cstddef>
#include <cstdint>

namespace bsfan {

class Exponent;

/// Which ring an operator lives in: the Weyl-type ring D_{n+p}, or its
/// homogenization D_{n+p}<z> with [dx_i, c] = (dc/dx_i) z.
enum class Ring : std::uint8_t { weyl, homogenized };

/// Variable layout of an exponent vector (alpha, mu, beta, nu, k):
///
///   [ x_1..x_n | t_1..t_p | dx_1..dx_n | dt_1..dt_p | z ]
///
/// The x and t blocks obey the same commutation rules, so most code indexes
/// the m = n + p "space" variables uniformly: slot q holds the coefficient
/// variable and slot m + q its derivation.
struct RingSignature {
  int n = 1;
  int p = 1;
  Ring ring = Ring::homogenized;

  /// Validating constructor; throws InvalidArgument unless n >= 1 and p >= 1.
  static RingSignature make(int n, int p, Ring ring = Ring::homogenized);

  std::size_t space_vars() const noexcept { return static_cast<std::size_t>(n + p); }
  std::size_t width() const noexcept { return 2 * space_vars() + 1; }

  std::size_t x(int i) const noexcept { return static_cast<std::size_t>(i); }
  std::size_t t(int j) const noexcept { return static_cast<std::size_t>(n + j); }
  std::size_t dx(int i) const noexcept { return space_vars() + static_cast<std::size_t>(i); }
  std::size_t dt(int j) const noexcept { return space_vars() + static_cast<std::size_t>(n + j); }
  std::size_t z() const noexcept { return 2 * space_vars(); }

  bool homogenized() const noexcept { return ring == Ring::homogenized; }

  /// |beta| + |nu|.
  std::uint64_t derivative_degree(const Exponent& e) const;
  /// k + |beta| + |nu|, the grading of D<z>.
  std::uint64_t homogeneous_degree(const Exponent& e) const;

  /// V_j(e) = nu_j - mu_j (0-based j).
  std::int64_t v_weight(const Exponent& e, int j) const;

  RingSignature with_ring(Ring r) const noexcept { return {n, p, r}; }

  bool operator==(const RingSignature&) const = default;
};

}  // namespace bsfan
