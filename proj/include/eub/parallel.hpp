#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eub::par {

// Execution policy for the data-parallel kernels. Serial is the reference
// path the tests compare against; OpenMP falls back to Serial when the
// build has no OpenMP support.
enum class Exec { Serial, OpenMP };

inline Exec default_exec() {
#ifdef _OPENMP
  return Exec::OpenMP;
#else
  return Exec::Serial;
#endif
}

// Runs body(i) for i in [0, n). Bodies must be independent; results go into
// caller-owned slots so output order never depends on scheduling.
template <class Fn>
void for_range(std::size_t n, Exec exec, Fn&& body) {
#ifdef _OPENMP
  if (exec == Exec::OpenMP) {
    std::exception_ptr err;
    #pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        #pragma omp critical(eub_par_err)
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

struct Scored {
  double value;
  std::size_t index;
};

// True when a beats b: larger value wins, ties go to the smaller index.
// The total order makes the parallel reduction bit-identical to serial.
inline bool better(const Scored& a, const Scored& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.index < b.index;
}

// Maximizes eval(i) over [0, n) with a deterministic tie-break.
template <class Fn>
Scored max_indexed(std::size_t n, Exec exec, Fn&& eval) {
  Scored best{-std::numeric_limits<double>::infinity(), 0};
#ifdef _OPENMP
  if (exec == Exec::OpenMP) {
    std::exception_ptr err;
    #pragma omp parallel
    {
      Scored local{-std::numeric_limits<double>::infinity(), 0};
      #pragma omp for schedule(dynamic) nowait
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
          Scored s{eval(static_cast<std::size_t>(i)), static_cast<std::size_t>(i)};
          if (better(s, local)) local = s;
        } catch (...) {
          #pragma omp critical(eub_par_err2)
          if (!err) err = std::current_exception();
        }
      }
      #pragma omp critical(eub_par_best)
      if (better(local, best)) best = local;
    }
    if (err) std::rethrow_exception(err);
    return best;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) {
    Scored s{eval(i), i};
    if (better(s, best)) best = s;
  }
  return best;
}

}  // namespace eub::par
