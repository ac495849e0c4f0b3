#include "generators.hpp"

#include <bsfan/errors.hpp>
#include <bsfan/expr.hpp>
#include <bsfan/order.hpp>

#include <gtest/gtest.h>

namespace bsfan {
namespace {

using testing::Gen;

std::size_t error_position(std::string_view text, RingSignature sig) {
  try {
    parse_operator(text, sig);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for " << text;
  return 0;
}

TEST(Parse, CommutationDependsOnRing) {
  const auto dz = RingSignature::make(1, 1);
  const auto d = RingSignature::make(1, 1, Ring::weyl);
  EXPECT_EQ(parse_operator("dx1*x1", dz), parse_operator("x1*dx1 + z", dz));
  EXPECT_EQ(parse_operator("dx1*x1", d), parse_operator("x1*dx1 + 1", d));
  EXPECT_EQ(format_operator(parse_operator("dx1*x1", dz)), "x1*dx1+z");
}

TEST(Parse, PolynomialOperator) {
  const auto sig = RingSignature::make(1, 1, Ring::weyl);
  const DOp p = parse_operator("t1 - x1^2", sig);
  DOp expected(sig);
  Exponent t(sig.width()), x2(sig.width());
  t[sig.t(0)] = 1;
  x2[sig.x(0)] = 2;
  expected.add_term(t, 1);
  expected.add_term(x2, -1);
  EXPECT_EQ(p, expected);
}

TEST(Parse, Associativity) {
  const auto sig = RingSignature::make(1, 1);
  EXPECT_EQ(parse_operator("dx1*(x1*dx1)", sig), parse_operator("(dx1*x1)*dx1", sig));
}

TEST(Parse, RationalsAndUnaryMinus) {
  const auto sig = RingSignature::make(2, 1, Ring::weyl);
  EXPECT_EQ(parse_operator("-3/4*x1^2", sig), parse_operator("x1*x1*(-3)/4", sig));
  EXPECT_EQ(format_operator(parse_operator("-3/4*x1^2", sig)), "-3/4*x1^2");
  EXPECT_EQ(format_operator(parse_operator("6/4", sig)), "3/2");
  EXPECT_EQ(format_operator(parse_operator("x1 - x1", sig)), "0");
  EXPECT_EQ(parse_operator("--x2", sig), parse_operator("x2", sig));
}

TEST(Parse, ErrorsCarryPositions) {
  const auto sig = RingSignature::make(1, 1, Ring::weyl);
  EXPECT_EQ(error_position("x1 + ", sig), 5u);
  EXPECT_EQ(error_position("x1 * $", sig), 5u);
  EXPECT_EQ(error_position("(x1", sig), 3u);
  EXPECT_EQ(error_position("x2", sig), 0u);
  EXPECT_EQ(error_position("x1 * z", sig), 5u);
  EXPECT_EQ(error_position("x1 / x1", sig), 3u);
  EXPECT_EQ(error_position("x1 / 0", sig), 3u);
  EXPECT_EQ(error_position("x1 x1", sig), 3u);
  EXPECT_THROW(parse_operator("x1^100000", sig), ParseError);
}

TEST(Parse, Polynomials) {
  const std::vector<std::string> names{"x1", "x2"};
  const Polynomial f = parse_polynomial("(x1 + x2)^2", names);
  EXPECT_EQ(f.to_string(names), "x1^2+2*x1*x2+x2^2");
  EXPECT_THROW(parse_polynomial("x3", names), ParseError);
  EXPECT_THROW(parse_polynomial("dx1", names), ParseError);
}

TEST(Format, LayoutOrderAndOrderDependentTermOrder) {
  const auto sig = RingSignature::make(1, 1);
  EXPECT_EQ(format_operator(parse_operator("x1^2*t1*dx1*dt1^2*z^3", sig)), "x1^2*t1*dx1*dt1^2*z^3");
  const DOp p = parse_operator("t1 + dt1", sig);
  const auto v1 = OrderDescriptor::lh_order(LinearForm::v_form(1, {1}));
  EXPECT_EQ(format_operator(p, v1), "dt1+t1");
  EXPECT_EQ(variable_names(sig), (std::vector<std::string>{"x1", "t1", "dx1", "dt1", "z"}));
}

TEST(Format, RoundTripsRandomOperators) {
  Gen g(91);
  for (int k = 0; k < 200; ++k) {
    const auto sig = k % 2 ? RingSignature::make(1, 1) : RingSignature::make(2, 2, Ring::weyl);
    const DOp p = g.op(sig, g.uniform(0, 5), 4);
    const std::string text = format_operator(p);
    EXPECT_EQ(parse_operator(text, sig), p) << text;
    EXPECT_EQ(format_operator(parse_operator(text, sig)), text);
  }
}

}  // namespace
}  // namespace bsfan
