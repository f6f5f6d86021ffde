#pragma once

// Data-parallel kernels behind the exhaustive checks and brute-force searches.
//
// Every kernel has a `serial` reference and a `parallel` (OpenMP) variant with
// an identical contract: the same results, in the same deterministic order.
// The rest of the library calls the parallel variants; the serial ones are
// kept for cross-checking in tests and for the benchmark.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "skewtwist/tables.hpp"

namespace skewtwist::kernels {

/// Below this many items the parallel variants run serially.
inline constexpr std::size_t kParallelThreshold = 2048;

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

/// Candidate twist on a base solution, before Psi is derived from T1.
struct TwistCandidate {
  PairMap F;
  TripleMap Phi;
};

namespace serial {

/// Smallest i in [0, count) with pred(i), or nullopt.
template <class Pred>
std::optional<std::size_t> find_first(std::size_t count, Pred&& pred) {
  for (std::size_t i = 0; i < count; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

/// Smallest triple index where r23 r12 r23 and r12 r23 r12 disagree.
std::optional<std::size_t> braid_violation(const PairMap& r);

/// All bijections r of X^2 satisfying the braid equation, in lexicographic
/// order of their tables. Requires n <= 3.
std::vector<PairMap> enumerate_solutions(std::size_t n);

/// All (F, Phi) with F in Sym(X^2), Phi in Sym(X^3) such that, with
/// Psi := F12^{-1} F23 Phi, the triple commutes with r as T2/T3 require.
/// F-major, then Phi in lexicographic order. Requires n <= 2.
std::vector<TwistCandidate> brute_force_twists(const PairMap& r);

}  // namespace serial

namespace parallel {

template <class Pred>
std::optional<std::size_t> find_first(std::size_t count, Pred&& pred) {
#if defined(_OPENMP)
  if (count >= kParallelThreshold) {
    std::size_t best = count;
    const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
      const auto index = static_cast<std::size_t>(i);
      if (index < best && pred(index)) best = index;
    }
    if (best == count) return std::nullopt;
    return best;
  }
#endif
  return serial::find_first(count, std::forward<Pred>(pred));
}

std::optional<std::size_t> braid_violation(const PairMap& r);
std::vector<PairMap> enumerate_solutions(std::size_t n);
std::vector<TwistCandidate> brute_force_twists(const PairMap& r);

}  // namespace parallel

}  // namespace skewtwist::kernels
