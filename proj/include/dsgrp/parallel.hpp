#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dsgrp::par {

// Execution mode for the scan kernels. Every parallel kernel has a serial
// twin reachable through this switch; results are identical by construction
// (parallel paths merge per-thread buffers and sort), so the serial path
// doubles as a reference implementation in tests and benchmarks.
enum class ExecMode { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline constexpr std::uint32_t kParallelCutoff = 512;

// Indices i in [0, n) satisfying pred, ascending. pred must be safe to call
// concurrently from several threads.
template <typename Pred>
std::vector<std::uint32_t> filter_indices(std::uint32_t n, Pred&& pred,
                                          ExecMode mode = ExecMode::parallel) {
  std::vector<std::uint32_t> out;
#ifdef _OPENMP
  if (mode == ExecMode::parallel && n >= kParallelCutoff &&
      omp_get_max_threads() > 1) {
    std::vector<std::vector<std::uint32_t>> buckets(
        static_cast<std::size_t>(omp_get_max_threads()));
    std::exception_ptr failure;  // exceptions must not escape the omp region
#pragma omp parallel
    {
      auto& mine = buckets[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        try {
          auto idx = static_cast<std::uint32_t>(i);
          if (pred(idx)) mine.push_back(idx);
        } catch (...) {
#pragma omp critical(dsgrp_par_failure)
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (const auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
  }
#endif
  (void)mode;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (pred(i)) out.push_back(i);
  }
  return out;
}

// fn(i) -> T for each i in [0, n), results in index order regardless of the
// execution mode or thread count. T must be default-constructible.
template <typename T, typename Fn>
std::vector<T> map_indices(std::uint32_t n, Fn&& fn,
                           ExecMode mode = ExecMode::parallel) {
  std::vector<T> out(n);
#ifdef _OPENMP
  if (mode == ExecMode::parallel && n >= kParallelCutoff &&
      omp_get_max_threads() > 1) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      try {
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::uint32_t>(i));
      } catch (...) {
#pragma omp critical(dsgrp_par_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
  }
#endif
  (void)mode;
  for (std::uint32_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

}  // namespace dsgrp::par
