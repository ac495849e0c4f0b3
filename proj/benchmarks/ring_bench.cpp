#include <benchmark/benchmark.h>

#include <bsfan/division.hpp>
#include <bsfan/dop.hpp>
#include <bsfan/expr.hpp>

namespace bsfan {

static void Multiply(benchmark::State& state) {
  const auto sig = RingSignature::make(2, 2);
  const DOp a = parse_operator("(x1 + t1*dx1 + dt2^2*z + x2*dt1)^" + std::to_string(state.range(0)), sig);
  const DOp b = parse_operator("dx1*dx2 + t2*x1 + z^2", sig);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>(a.size());
}

static void Divide(benchmark::State& state) {
  const auto sig = RingSignature::make(2, 2);
  const DOp p = parse_operator("(dx1 + dt1 + x2*dx2)^" + std::to_string(state.range(0)), sig);
  const std::vector<DOp> divisors{parse_operator("dx1 + dt1", sig), parse_operator("x2*dx2 - t2*dt2", sig)};
  const auto ord = OrderDescriptor::lh_order(LinearForm::v_form(2, {1, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(divide(p, divisors, ord));
}

BENCHMARK(Multiply)->DenseRange(2, 5);
BENCHMARK(Divide)->DenseRange(2, 5);
}  // namespace bsfan
