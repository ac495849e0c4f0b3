#pragma once

#include <bsfan/sabbah.hpp>
#include <bsfan/vfan.hpp>

#include <string>

namespace bsfan {

/// {"n","p","cones":[{"lower","upper","lower_closed","upper_closed","basis","kappa_sigma"}],
///  "skeleton","kappa1"} with two-space indentation.
std::string fan_to_json(const VFan& fan);

/// Static SVG of the quadrant: one angular sector per cone, skeleton rays labelled
/// by their primitive (a,b), per-cone kappa and basis size.
std::string fan_to_svg(const VFan& fan);

}  // namespace bsfan
