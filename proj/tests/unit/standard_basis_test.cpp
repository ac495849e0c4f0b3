#include "generators.hpp"
#include "oracles.hpp"

#include <bsfan/division.hpp>
#include <bsfan/errors.hpp>
#include <bsfan/expr.hpp>
#include <bsfan/malgrange.hpp>
#include <bsfan/standard_basis.hpp>

#include <gtest/gtest.h>

#include <algorithm>

namespace bsfan {
namespace {

using testing::Gen;

const RingSignature kW11 = RingSignature::make(1, 1, Ring::weyl);
const RingSignature kH11 = RingSignature::make(1, 1);

IdealPresentation weyl_ideal(RingSignature sig, std::initializer_list<const char*> gens) {
  IdealPresentation ip;
  for (const char* g : gens) ip.generators.push_back(parse_operator(g, sig.with_ring(Ring::weyl)));
  return ip;
}

TEST(StandardBasis, SingleMonomial) {
  IdealPresentation ip{{parse_operator("dx1", kH11)}, true};
  const auto b = reduced_basis(ip, OrderDescriptor::lh_order(LinearForm::v_j(1, 1, 0)));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.elements()[0], parse_operator("dx1", kH11));
  EXPECT_EQ(homogenize_ideal({parse_operator("dx1", kW11)}).generators,
            std::vector<DOp>{parse_operator("dx1", kH11)});
}

TEST(StandardBasis, ReduceMinimalDropsDominated) {
  const auto ord = OrderDescriptor::lh_order(LinearForm::v_j(1, 1, 0));
  StandardBasis b({parse_operator("dx1", kH11), parse_operator("x1*dx1", kH11)}, ord);
  const auto r = reduce_minimal(b);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.elements()[0], parse_operator("dx1", kH11));
  EXPECT_EQ(reduce_minimal(r).elements(), r.elements());
  StandardBasis truncated({parse_operator("dx1", kH11)}, ord, false, true);
  EXPECT_THROW(reduce_minimal(truncated), PreconditionViolated);
}

TEST(StandardBasis, HomogenizationExample) {
  const auto h = homogenize_ideal({parse_operator("x1 + dx1^2", kW11)});
  EXPECT_NE(std::find(h.generators.begin(), h.generators.end(), parse_operator("x1*z^2 + dx1^2", kH11)),
            h.generators.end());
}

// Random left combinations sum_k a_k g_k of bounded degree.
DOp ideal_element(Gen& g, const std::vector<DOp>& gens, int max_total) {
  DOp sum(gens.front().signature());
  for (const auto& q : gens) sum += g.op(q.signature(), 2, max_total) * q;
  return sum;
}

TEST(StandardBasis, MalgrangeCompletionReducesIdealElements) {
  Gen g(41);
  const auto ip = weyl_ideal(kW11, {"t1 - x1", "dx1 + dt1"});
  const auto b = reduced_basis(ip, OrderDescriptor::degree_first(1, 1));
  ASSERT_FALSE(b.truncated());
  EXPECT_EQ(verify_reduced_minimal(b.elements(), b.order()), "");
  for (int trial = 0; trial < 100; ++trial)
    EXPECT_TRUE(normal_form(ideal_element(g, ip.generators, 4), b).is_zero());
  // a monomial outside Exp is never in I
  for (const auto& e : {Exponent{0, 0, 0, 0, 0}, Exponent{1, 0, 0, 0, 0}, Exponent{0, 0, 1, 0, 0}})
    EXPECT_FALSE(exp_set_membership(e, b));
}

TEST(StandardBasis, HomogenizedIdealContainsEveryHomogenization) {
  // h(P) for P in I lies in h(I); the naive ideal of homogenized generators
  // misses some of them, which is why h(I) goes through a global basis.
  Gen g(42);
  const auto ip = weyl_ideal(kW11, {"t1 - x1^2", "dx1 + 2*x1*dt1"});
  const auto hI = homogenize_ideal(ip.generators);
  const auto ord = OrderDescriptor::lh_order(LinearForm::v_j(1, 1, 0));
  const auto b = reduced_basis(hI, ord);
  ASSERT_FALSE(b.truncated());
  for (const auto& q : b.elements()) EXPECT_TRUE(q.is_homogeneous());
  for (int trial = 0; trial < 50; ++trial) {
    const DOp p = ideal_element(g, ip.generators, 3);
    if (p.is_zero()) continue;
    const DOp h = homogenize(p);
    EXPECT_TRUE(normal_form(h, b).is_zero());
    // z-saturation: z^k h(P) in h(I) and h(P) in h(I) agree
    EXPECT_TRUE(normal_form(times_z(h, 2), b).is_zero());
  }
  // a non-member stays a non-member after multiplying by z
  const DOp outside = parse_operator("dt1", kH11);
  EXPECT_FALSE(normal_form(outside, b).is_zero());
  EXPECT_FALSE(normal_form(times_z(outside, 1), b).is_zero());
}

TEST(StandardBasis, CanonicalUnderPermutationAndRedundancy) {
  Gen g(43);
  struct Example {
    int n;
    std::vector<std::string> f;
  };
  for (const auto& ex : std::vector<Example>{{1, {"x1"}}, {1, {"x1^2"}}, {2, {"x1", "x2"}}, {2, {"x1", "x1*x2"}}}) {
    MalgrangeInput in;
    in.n = ex.n;
    for (const auto& f : ex.f) in.f.push_back(parse_polynomial(f, x_names(ex.n)));
    in.v.assign(in.f.size(), 0);
    const auto ip = malgrange_ideal(in);
    const auto sig = ip.signature();
    const auto hI = homogenize_ideal(ip.generators);
    const auto ord = OrderDescriptor::lh_order(g.v_form(sig.n, sig.p));
    const auto ref = reduced_basis(hI, ord);
    ASSERT_FALSE(ref.truncated());
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
      auto gens = hI.generators;
      std::shuffle(gens.begin(), gens.end(), g.engine());
      if (shuffle % 2) {
        const auto d = std::max(gens.front().degree(), gens.back().degree());
        gens.push_back(DOp::x(sig.with_ring(Ring::homogenized), 0) *
                           times_z(gens.front(), static_cast<std::uint32_t>(d - gens.front().degree())) +
                       times_z(gens.back(), static_cast<std::uint32_t>(d - gens.back().degree())));
      }
      const auto b = reduced_basis(IdealPresentation{gens, true}, ord);
      EXPECT_EQ(b.elements(), ref.elements()) << ord.describe();
    }
    // the same for the Weyl-ring basis under the degree order
    const auto wref = reduced_basis(ip, OrderDescriptor::degree_first(sig.n, sig.p));
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
      auto gens = ip.generators;
      std::shuffle(gens.begin(), gens.end(), g.engine());
      if (shuffle % 2) gens.push_back(DOp::x(sig, 0) * gens.front());
      EXPECT_EQ(reduced_basis(IdealPresentation{gens, false}, wref.order()).elements(), wref.elements());
    }
  }
}

TEST(StandardBasis, StaircaseMembershipMatchesSetOracle) {
  Gen g(44);
  const auto hI = homogenize_ideal(weyl_ideal(kW11, {"t1 - x1^2", "dx1 + 2*x1*dt1"}).generators);
  const auto b = reduced_basis(hI, OrderDescriptor::lh_order(LinearForm::v_j(1, 1, 0)));
  ASSERT_FALSE(b.truncated());
  const auto box = testing::box_staircase(b.apexes(), kH11.width(), 3);
  for (int k = 0; k < 500; ++k) {
    const Exponent e = g.exponent(kH11, 3, true);
    EXPECT_EQ(exp_set_membership(e, b), !box.complement.count(e.entries()));
  }
  for (const auto& a : b.apexes()) EXPECT_TRUE(exp_set_membership(a, b));
}

TEST(StandardBasis, BudgetExhaustionIsFlagged) {
  const auto ip = weyl_ideal(RingSignature::make(2, 2, Ring::weyl),
                             {"t1 - x1^3 + x2^2", "t2 - x1*x2", "dx1 + 3*x1^2*dt1 + x2*dt2", "dx2 - 2*x2*dt1 + x1*dt2"});
  Budget tight;
  tight.completion_steps = 1;
  const auto b = reduced_basis(ip, OrderDescriptor::degree_first(2, 2), tight);
  EXPECT_TRUE(b.truncated());
  EXPECT_THROW(homogenize_ideal(ip.generators, tight), BudgetExhausted);
}

TEST(StandardBasis, NonHomogeneousInputRejectedUnderHomogenizedOrders) {
  const IdealPresentation ip{{parse_operator("dx1 + z^2", kH11)}, true};
  EXPECT_THROW(complete(ip, OrderDescriptor::lh_order(LinearForm::v_j(1, 1, 0))), PreconditionViolated);
  EXPECT_NO_THROW(complete(ip, OrderDescriptor::degree_first(1, 1)));
}

TEST(StandardBasis, HomogeneousIdealHasHomogeneousBasis) {
  Gen g(45);
  const auto sig = RingSignature::make(1, 2);
  for (int trial = 0; trial < 10; ++trial) {
    IdealPresentation ip{{g.homogeneous_op(sig, 1, 2, 3), g.homogeneous_op(sig, 2, 2, 3)}, true};
    Budget b;
    b.completion_steps = 2000;
    b.division_steps = 20000;
    const auto sb = reduced_basis(ip, OrderDescriptor::lh_order(g.v_form(1, 2)), b);
    if (sb.truncated()) continue;
    for (const auto& q : sb.elements()) EXPECT_TRUE(q.is_homogeneous());
  }
}

}  // namespace
}  // namespace bsfan
