#include <benchmark/benchmark.h>

#include <bsfan/expr.hpp>
#include <bsfan/malgrange.hpp>
#include <bsfan/standard_basis.hpp>
#include <bsfan/vfan.hpp>

namespace bsfan {

namespace {

IdealPresentation malgrange_h(int n, std::vector<std::string> fs) {
  MalgrangeInput in;
  in.n = n;
  for (const auto& f : fs) in.f.push_back(parse_polynomial(f, x_names(n)));
  in.v.assign(in.f.size(), 0);
  return homogenize_ideal(malgrange_ideal(in).generators);
}

}  // namespace

static void Complete(benchmark::State& state) {
  const auto hI = malgrange_h(2, {"x1", "x1+x2^2"});
  const auto ord = OrderDescriptor::lh_order(LinearForm::v_form(2, {1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_basis(hI, ord));
}

static void FanNormalCrossings(benchmark::State& state) {
  const auto hI = malgrange_h(2, {"x1", "x2"});
  for (auto _ : state) benchmark::DoNotOptimize(compute_fan(hI));
}

static void FanThreeCones(benchmark::State& state) {
  const IdealPresentation hI{{parse_operator("dt1+dt2", RingSignature::make(1, 2))}, true};
  for (auto _ : state) benchmark::DoNotOptimize(compute_fan(hI));
}

static void FanCuspLike(benchmark::State& state) {
  const auto hI = malgrange_h(2, {"x1", "x1+x2^2"});
  for (auto _ : state) benchmark::DoNotOptimize(compute_fan(hI));
}

BENCHMARK(Complete);
BENCHMARK(FanNormalCrossings);
BENCHMARK(FanThreeCones);
BENCHMARK(FanCuspLike);
}  // namespace bsfan
