#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fz {

// Every kernel takes an Exec tag; the serial path is the reference used in tests.
enum class Exec { serial, parallel };

void set_threads(int n);
int thread_count();

// Work is split into fixed-size blocks independent of the thread count, so
// block partials (and their ordered reduction) are bit-identical across runs.
inline constexpr std::size_t kBlock = 4096;

inline std::size_t block_count(std::size_t n) { return (n + kBlock - 1) / kBlock; }

// Exceptions never cross the parallel region; the one from the lowest index is rethrown.
template <class F>
void for_each_index(std::size_t n, Exec ex, F&& f) {
  if (ex == Exec::parallel) {
    const long long nn = static_cast<long long>(n);
    std::exception_ptr first;
    long long first_idx = nn;
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < nn; ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(fz_for_each_index)
        if (i < first_idx) {
          first_idx = i;
          first = std::current_exception();
        }
      }
    }
    if (first) std::rethrow_exception(first);
  } else {
    for (std::size_t i = 0; i < n; ++i) f(i);
  }
}

// Counter-keyed stream: one generator per (seed, stratum), independent of scheduling.
inline std::mt19937_64 stratum_rng(std::uint64_t seed, std::uint64_t stratum) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stratum), static_cast<std::uint32_t>(stratum >> 32),
                    0x9e3779b9u};
  return std::mt19937_64(seq);
}

}  // namespace fz
