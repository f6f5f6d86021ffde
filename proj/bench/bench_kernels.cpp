// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "skewtwist/brace.hpp"
#include "skewtwist/kernels.hpp"
#include "skewtwist/matched_pair.hpp"

using namespace skewtwist;

namespace {

// Conjugation on S4 x Z2: a valid solution on 48 points, so the braid scan
// runs over the whole cube.
const PairMap& big_solution() {
  static const PairMap r = trivial_brace(
      FiniteGroup::direct_product(FiniteGroup::symmetric(4), FiniteGroup::cyclic(2))).r();
  return r;
}

const MatchedPair& z4_pair() {
  static const MatchedPair p = [] {
    std::vector<Elem> dot(16);
    for (Elem x = 0; x < 4; ++x)
      for (Elem y = 0; y < 4; ++y) dot[x * 4 + y] = (x + y + 2 * x * y) % 4;
    return pair_from_brace(braiding_from_brace(FiniteGroup(4, dot, 0), FiniteGroup::cyclic(4)));
  }();
  return p;
}

template <auto Kernel>
void braid_scan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(big_solution()));
}

template <auto Kernel>
void solutions(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n));
}

template <auto Kernel>
void twists_on_flip(benchmark::State& state) {
  const PairMap flip = PairMap::flip(2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(flip));
}

template <bool Parallel>
void first_match(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const std::size_t target = count - 1;
  auto pred = [&](std::size_t i) { return i * 2654435761u % count == target * 2654435761u % count; };
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::find_first(count, pred));
    else
      benchmark::DoNotOptimize(kernels::serial::find_first(count, pred));
  }
}

void thetas_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(detail::enumerate_thetas_serial(z4_pair(), 10000000));
}
void thetas_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_thetas(z4_pair(), 10000000));
}

}  // namespace

BENCHMARK(braid_scan<kernels::serial::braid_violation>)->Name("braid_violation/serial")->UseRealTime();
BENCHMARK(braid_scan<kernels::parallel::braid_violation>)->Name("braid_violation/parallel")->UseRealTime();
BENCHMARK(solutions<kernels::serial::enumerate_solutions>)->Name("enumerate_solutions/serial")->Arg(2)->Arg(3)->UseRealTime();
BENCHMARK(solutions<kernels::parallel::enumerate_solutions>)->Name("enumerate_solutions/parallel")->Arg(2)->Arg(3)->UseRealTime();
BENCHMARK(twists_on_flip<kernels::serial::brute_force_twists>)->Name("brute_force_twists/serial")->UseRealTime();
BENCHMARK(twists_on_flip<kernels::parallel::brute_force_twists>)->Name("brute_force_twists/parallel")->UseRealTime();
BENCHMARK(first_match<false>)->Name("find_first/serial")->Arg(1 << 20)->UseRealTime();
BENCHMARK(first_match<true>)->Name("find_first/parallel")->Arg(1 << 20)->UseRealTime();
BENCHMARK(thetas_serial)->Name("enumerate_thetas/serial")->UseRealTime();
BENCHMARK(thetas_parallel)->Name("enumerate_thetas/parallel")->UseRealTime();

BENCHMARK_MAIN();
