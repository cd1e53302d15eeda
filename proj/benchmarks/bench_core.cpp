#include <benchmark/benchmark.h>

#include "sliceball/bounds.hpp"
#include "sliceball/sampling.hpp"
#include "sliceball/series.hpp"
#include "sliceball/verify.hpp"

namespace {

using namespace sliceball;

void BM_StarProduct(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::vector<Quaternion> c(static_cast<std::size_t>(order) + 1,
                            Quaternion{0.1, 0.2, -0.3, 0.05});
  const SliceSeries f(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(star_product(f, f, 2 * order));
  }
}
BENCHMARK(BM_StarProduct)->Arg(16)->Arg(64);

void BM_EvalBatch(benchmark::State& state) {
  const SliceSeries f = extremal_f_alpha(0.6, 64);
  const auto pts = sample_ball(0.33, 1024, 42);
  for (auto _ : state) {
    Quaternion acc = Quaternion::zero();
    for (const Quaternion& q : pts) {
      acc += f.eval(q);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_EvalBatch);

void BM_SampleBall(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_ball(1.0, 100000, 42));
  }
}
BENCHMARK(BM_SampleBall);

void BM_NearPairHash(benchmark::State& state) {
  const auto pts = sample_ball(0.9, 100000, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_near_image_pair(pts, pts, 1e-9, 1e-4));
  }
}
BENCHMARK(BM_NearPairHash);

void BM_BlochConstants(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bloch_constants());
  }
}
BENCHMARK(BM_BlochConstants);

void BM_BergmanNorm(benchmark::State& state) {
  const SliceSeries f = extremal_f_alpha(0.6, 16);
  SampleConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bergman_norm(f, 2.0, cfg));
  }
}
BENCHMARK(BM_BergmanNorm);

}  // namespace

BENCHMARK_MAIN();
