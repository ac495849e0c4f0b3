#include "generators.hpp"
#include "oracles.hpp"

#include <bsfan/errors.hpp>
#include <bsfan/expr.hpp>
#include <bsfan/malgrange.hpp>
#include <bsfan/standard_basis.hpp>
#include <bsfan/vfan.hpp>

#include <gtest/gtest.h>

#include <algorithm>

namespace bsfan {
namespace {

using testing::Gen;

IdealPresentation malgrange_h(int n, std::vector<std::string> fs) {
  MalgrangeInput in;
  in.n = n;
  for (const auto& f : fs) in.f.push_back(parse_polynomial(f, x_names(n)));
  in.v.assign(in.f.size(), 0);
  return homogenize_ideal(malgrange_ideal(in).generators);
}

IdealPresentation dt_sum_model() {
  const auto sig = RingSignature::make(1, 2);
  return IdealPresentation{{parse_operator("dt1 + dt2", sig)}, true};
}

std::vector<DOp> sorted(std::vector<DOp> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(StabilityCone, WholeQuadrantWhenWeightsCancel) {
  const auto sig = RingSignature::make(1, 2);
  const LinearForm L = LinearForm::v_form(1, {1, 1});
  const StandardBasis b({parse_operator("t1*dt1 + t2*dt2", sig)}, OrderDescriptor::lh_order(L), true);
  const Cone2 c = stability_cone(b, L);
  EXPECT_EQ(c.lower, SlopeDirection::v1());
  EXPECT_EQ(c.upper, SlopeDirection::v2());
  EXPECT_TRUE(c.lower_closed && c.upper_closed);
  const StandardBasis mono({parse_operator("t1*dt2^2", sig)}, OrderDescriptor::lh_order(L), true);
  EXPECT_EQ(stability_cone(mono, L), c);
}

TEST(StabilityCone, HalfPlaneWithExcludedBoundary) {
  const auto sig = RingSignature::make(1, 2);
  const LinearForm L = LinearForm::v_form(1, {2, 1});
  const StandardBasis b({parse_operator("dt1 + dt2", sig)}, OrderDescriptor::lh_order(L), true);
  const Cone2 c = stability_cone(b, L);
  EXPECT_EQ(c.lower, SlopeDirection::v1());
  EXPECT_TRUE(c.lower_closed);
  EXPECT_EQ(c.upper, SlopeDirection(1, 1));
  EXPECT_FALSE(c.upper_closed);
}

TEST(Fan, DtSumModelHasThreeCones) {
  const VFan fan = compute_fan(dt_sum_model());
  ASSERT_EQ(fan.cones.size(), 3u);
  EXPECT_FALSE(fan.partial);
  EXPECT_EQ(fan.skeleton, (std::vector<SlopeDirection>{{1, 0}, {1, 1}, {0, 1}}));
  EXPECT_TRUE(fan.cones[1].cone.is_ray());
  const auto sig = RingSignature::make(1, 2);
  const auto apex = [&](std::size_t i) {
    const auto& c = fan.cones[i];
    return privileged_exponent(c.basis.elements()[0], boundary_order(c.cone, c.cone.lower, 1));
  };
  EXPECT_EQ(apex(0), parse_operator("dt1", sig).terms().begin()->first);
  EXPECT_EQ(privileged_exponent(fan.cones[2].basis.elements()[0],
                                OrderDescriptor::lh_order(fan.cones[2].cone.interior_witness(1))),
            parse_operator("dt2", sig).terms().begin()->first);
  const auto k = kappa1(fan);
  EXPECT_EQ(k.kappa1, 1);
  EXPECT_EQ(k.shift_vector[0], 1);
  EXPECT_EQ(k.shift_vector[1], 0);
  EXPECT_EQ(fan.cones[0].kappa_sigma, 0);
  EXPECT_EQ(fan.cones[2].kappa_sigma, 1);
}

TEST(Fan, NormalCrossingsIsOneCone) {
  const VFan fan = compute_fan(malgrange_h(2, {"x1", "x2"}));
  ASSERT_EQ(fan.cones.size(), 1u);
  EXPECT_EQ(fan.cones[0].cone, (Cone2{SlopeDirection::v1(), SlopeDirection::v2(), true, true}));
  EXPECT_EQ(fan.skeleton, (std::vector<SlopeDirection>{{1, 0}, {0, 1}}));
  EXPECT_EQ(kappa1(fan).kappa1, 0);
  EXPECT_EQ(skeleton(fan), fan.skeleton);
}

TEST(Fan, KappaSigmaDirectEvaluation) {
  const auto sig = RingSignature::make(1, 2);
  const StandardBasis b({parse_operator("dt1 + dt2", sig)},
                        OrderDescriptor::lh_order(LinearForm::v_form(1, {1, 2})), true);
  EXPECT_EQ(kappa_sigma(b, SlopeDirection::v2(), 1), 1);
  const StandardBasis mono({parse_operator("t1*dt2", sig)},
                           OrderDescriptor::lh_order(LinearForm::v_form(1, {1, 2})), true);
  EXPECT_EQ(kappa_sigma(mono, SlopeDirection::v2(), 1), 0);
}

struct FanExample {
  const char* name;
  IdealPresentation hI;
};

std::vector<FanExample> shipped_examples() {
  return {{"dt1+dt2", dt_sum_model()},
          {"normal crossings", malgrange_h(2, {"x1", "x2"})},
          {"x1, x1*x2", malgrange_h(2, {"x1", "x1*x2"})},
          {"x1, x1+x2^2", malgrange_h(2, {"x1", "x1+x2^2"})}};
}

TEST(Fan, MatchesSlopeSamplingOracle) {
  for (const auto& ex : shipped_examples()) {
    const VFan fan = compute_fan(ex.hI);
    const auto groups = testing::sample_fan(ex.hI, testing::twenty_slopes());
    std::vector<std::size_t> hit;
    for (const auto& d : testing::twenty_slopes()) {
      const auto idx = fan.locate(d);
      ASSERT_TRUE(idx) << ex.name;
      if (hit.empty() || hit.back() != *idx) hit.push_back(*idx);
    }
    EXPECT_EQ(hit.size(), groups.size()) << ex.name;
    for (const auto& g : groups)
      for (const auto& d : g) EXPECT_EQ(fan.locate(d), fan.locate(g.front())) << ex.name;
  }
}

TEST(Fan, RandomRaysLandInExactlyOneCone) {
  Gen g(51);
  for (const auto& ex : shipped_examples()) {
    const VFan fan = compute_fan(ex.hI);
    for (int k = 0; k < 100; ++k) {
      const int a = g.uniform(0, 30), b = g.uniform(0, 30);
      if (a == 0 && b == 0) continue;
      const SlopeDirection d(a, b);
      const auto n = std::count_if(fan.cones.begin(), fan.cones.end(),
                                   [&](const FanCone& c) { return c.cone.contains(d); });
      EXPECT_EQ(n, 1) << ex.name << " " << d.to_string();
    }
  }
}

TEST(Fan, InteriorSamplesGiveTheConeBasis) {
  for (const auto& ex : shipped_examples()) {
    const VFan fan = compute_fan(ex.hI);
    for (const auto& c : fan.cones) {
      std::vector<SlopeDirection> samples;
      if (c.cone.is_ray()) {
        samples.push_back(c.cone.lower);
      } else {
        for (std::int64_t r = 1; r <= 10; ++r)
          samples.emplace_back(r * c.cone.lower.a() + (11 - r) * c.cone.upper.a(),
                               r * c.cone.lower.b() + (11 - r) * c.cone.upper.b());
      }
      for (const auto& d : samples) {
        const auto b = reduced_basis(ex.hI, OrderDescriptor::lh_order(d.form(fan.n)));
        EXPECT_EQ(sorted(b.elements()), sorted(c.basis.elements())) << ex.name << " " << d.to_string();
      }
    }
  }
}

TEST(Fan, BoundaryOrdersAgreeWithNearbyInteriorForms) {
  // exp under the boundary order at L equals exp under <_{L'}^h for L' = L_sigma + r L.
  for (const auto& ex : shipped_examples()) {
    const VFan fan = compute_fan(ex.hI);
    for (const auto& c : fan.cones) {
      const SlopeDirection mid = c.cone.interior_direction();
      for (const auto& L : {c.cone.lower, c.cone.upper}) {
        const auto tri = boundary_order(c.cone, L, fan.n);
        EXPECT_EQ(verify_reduced_minimal(c.basis.elements(), tri), "") << ex.name;
        for (std::int64_t r : {0, 1, 2, 3, 5, 8, 13, 21, 50, 100}) {
          const SlopeDirection lp(mid.a() + r * L.a(), mid.b() + r * L.b());
          const auto lh = OrderDescriptor::lh_order(lp.form(fan.n));
          for (const auto& q : c.basis.elements())
            EXPECT_EQ(privileged_exponent(q, tri), privileged_exponent(q, lh)) << ex.name << " " << lp.to_string();
        }
      }
    }
  }
}

TEST(Fan, KappaDoesNotGrowUnderRefinement) {
  for (const auto& ex : shipped_examples()) {
    const VFan fan = compute_fan(ex.hI);
    for (const auto& c : fan.cones) {
      if (c.cone.is_ray()) continue;
      const SlopeDirection mid = c.cone.interior_direction();
      EXPECT_LE(kappa_sigma(c.basis, mid, fan.n), c.kappa_sigma) << ex.name;
      EXPECT_EQ(kappa_sigma(c.basis, c.cone.upper, fan.n), c.kappa_sigma) << ex.name;
    }
  }
}

TEST(Fan, OneParameterIsASingleRay) {
  const VFan fan = compute_fan(malgrange_h(1, {"x1^2"}));
  ASSERT_EQ(fan.cones.size(), 1u);
  EXPECT_TRUE(fan.cones[0].cone.is_ray());
  EXPECT_EQ(fan.skeleton, std::vector<SlopeDirection>{SlopeDirection::v1()});
}

TEST(Fan, ThreeParametersRejected) {
  EXPECT_THROW(compute_fan(malgrange_h(1, {"x1", "x1", "x1"})), PreconditionViolated);
}

TEST(Fan, CoverageLocateAndConeBetween) {
  const VFan fan = compute_fan(dt_sum_model());
  EXPECT_EQ(fan.locate(SlopeDirection(1, 1)), 1u);
  EXPECT_EQ(fan.locate(SlopeDirection(3, 1)), 0u);
  EXPECT_EQ(fan.locate(SlopeDirection::v2()), 2u);
  EXPECT_EQ(fan.cone_between(SlopeDirection(1, 1), SlopeDirection::v2()), 2u);
  EXPECT_FALSE(fan.cone_between(SlopeDirection::v1(), SlopeDirection::v2()).has_value());
}

TEST(Fan, PartialFlagOnTinyBudget) {
  Budget tight;
  tight.completion_steps = 1;
  const VFan fan = compute_fan(malgrange_h(2, {"x1", "x1+x2^2"}), tight);
  EXPECT_TRUE(fan.partial);
  EXPECT_THROW(kappa1(fan), PreconditionViolated);
}

}  // namespace
}  // namespace bsfan
