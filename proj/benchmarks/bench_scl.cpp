#include <benchmark/benchmark.h>

#include "scl/cayley.hpp"
#include "scl/families.hpp"
#include "scl/shortcut_free.hpp"
#include "scl/shortcut_product.hpp"

namespace {

void BM_BallProfile(benchmark::State& state) {
  const bool twisted = state.range(0) != 0;
  const int radius = static_cast<int>(state.range(1));
  for (auto _ : state) {
    scl::DistanceOracle oracle(twisted ? scl::MarkedAlphabet::twisted() : scl::MarkedAlphabet::standard(), radius);
    benchmark::DoNotOptimize(oracle.ball_profile(radius));
  }
}
BENCHMARK(BM_BallProfile)->ArgsProduct({{0, 1}, {4, 5, 6}})->Unit(benchmark::kMillisecond);

// Distance queries against a warm forward ball.
void BM_TwistedDistance(benchmark::State& state) {
  const auto& tw = scl::MarkedAlphabet::twisted();
  scl::DistanceOracle oracle(tw, 10);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const scl::NormalForm g = scl::eval(scl::u_family({n, n / 2, scl::Variant::kPlain}), tw);
  oracle.distance_from_identity(g);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.distance_from_identity(g));
}
BENCHMARK(BM_TwistedDistance)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_IsometricCycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  scl::DistanceOracle oracle(scl::MarkedAlphabet::twisted(), 10);
  const scl::Word w = scl::w_n(n);
  for (auto _ : state) benchmark::DoNotOptimize(scl::is_isometric_cycle(oracle, w));
}
BENCHMARK(BM_IsometricCycle)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SplitNullWord(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const scl::Word w = scl::random_null_word(len, 1.0, 42);
  for (auto _ : state) benchmark::DoNotOptimize(scl::split_null_word(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SplitNullWord)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_Shortcut(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const scl::Word w = scl::random_null_word(len, 0.5, 42);
  for (auto _ : state) {
    const auto cert = scl::shortcut(w);
    benchmark::DoNotOptimize(scl::verify_certificate(w, cert));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Shortcut)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

}  // namespace

BENCHMARK_MAIN();
