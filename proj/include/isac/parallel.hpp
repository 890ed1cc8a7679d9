#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isac {

// Execution mode for the Monte Carlo kernels. Every OpenMP kernel has a
// serial twin that produces bit-identical results: trials write to per-index
// slots and the merge runs in fixed order, so the schedule cannot leak into
// the output. Tests compare the two paths; the bench target times them.
enum class ExecMode { serial, openmp };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs body(i) for i in [0, n). body must only write to state owned by
// index i.
template <typename F>
void for_each_index(std::int64_t n, ExecMode mode, F&& body) {
  if (mode == ExecMode::openmp) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }
}

}  // namespace isac
