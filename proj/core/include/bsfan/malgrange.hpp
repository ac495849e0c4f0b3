#pragma once

#include <bsfan/polynomial.hpp>
#include <bsfan/standard_basis.hpp>

#include <cstdint>
#include <vector>

namespace bsfan {

/// f_1..f_p in Q[x_1..x_n] and the shift v in N^p.
struct MalgrangeInput {
  int n = 1;
  std::vector<Polynomial> f;
  std::vector<std::int64_t> v;

  int p() const noexcept { return static_cast<int>(f.size()); }
};

/// { t_j - f_j } followed by { dx_i + sum_j (df_j/dx_i) dt_j }, in the Weyl ring.
/// Throws InvalidArgument on an empty list, a zero f_j or a variable-count mismatch.
IdealPresentation malgrange_ideal(const MalgrangeInput& input);

/// Embeds a polynomial in x_1..x_n as a zeroth-order operator of sig.
DOp polynomial_operator(const Polynomial& f, RingSignature sig);

}  // namespace bsfan
