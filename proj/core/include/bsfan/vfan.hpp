#pragma once

#include <bsfan/budget.hpp>
#include <bsfan/linear_form.hpp>
#include <bsfan/order.hpp>
#include <bsfan/slope.hpp>
#include <bsfan/standard_basis.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace bsfan {

/// A cone of the quadrant, as a slope interval between two primitive rays.
/// A ray has lower == upper with both ends closed.
struct Cone2 {
  SlopeDirection lower = SlopeDirection::v1();
  SlopeDirection upper = SlopeDirection::v2();
  bool lower_closed = true;
  bool upper_closed = true;

  bool is_ray() const noexcept { return lower == upper; }
  bool contains(const SlopeDirection& d) const;
  /// lower + upper for a 2-dimensional cone (strictly inside), the ray itself otherwise.
  SlopeDirection interior_direction() const;
  LinearForm interior_witness(int n, int p = 2) const { return interior_direction().form(n, p); }

  bool operator==(const Cone2&) const = default;
};

struct FanCone {
  Cone2 cone;
  StandardBasis basis;
  std::int64_t kappa_sigma = 0;
};

class VFan {
 public:
  int n = 1;
  int p = 2;
  std::vector<FanCone> cones;
  std::vector<SlopeDirection> skeleton;
  /// A completion inside some cone ran out of budget.
  bool partial = false;

  /// Index of the unique cone containing d, or nullopt if coverage is broken.
  std::optional<std::size_t> locate(const SlopeDirection& d) const;
  /// The 2-dimensional cone whose closure is spanned by lo and hi, if any.
  std::optional<std::size_t> cone_between(const SlopeDirection& lo, const SlopeDirection& hi) const;
};

struct KappaResult {
  std::int64_t kappa1 = 0;
  std::vector<std::pair<Cone2, std::int64_t>> per_cone;
  std::array<std::int64_t, 2> shift_vector{0, 0};
};

/// Maximal slope interval around L on which every basis element keeps its
/// privileged exponent and its L-symbol support. Requires p = 2 and a
/// reduced-minimal basis.
Cone2 stability_cone(const StandardBasis& basis, const LinearForm& L);

/// Sweeps the quadrant from V_1 to V_2. hI must be homogeneous.
/// For p = 1 the result is the single ray V_1.
VFan compute_fan(const IdealPresentation& hI, const Budget& budget = {});

/// Primitive generators of all cone closures, slope-sorted, deduplicated.
std::vector<SlopeDirection> skeleton(const VFan& fan);

/// max_j ord^{V_1}(Q_j) - ord^{V_1}(sigma^{upper}(Q_j)), at least 0.
std::int64_t kappa_sigma(const StandardBasis& basis, const SlopeDirection& upper, int n);

/// Throws PreconditionViolated on a partial fan.
KappaResult kappa1(const VFan& fan);

/// The order used on a boundary generator L of a cone: tri(L, interior witness).
OrderDescriptor boundary_order(const Cone2& cone, const SlopeDirection& L, int n);

}  // namespace bsfan
