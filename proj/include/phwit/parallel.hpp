#pragma once

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace phwit {

/// Runs f(i) for i in [0, n). Iterations must be independent; results are
/// written by index, so the outcome is identical for the serial and the
/// OpenMP path.
template <typename F>
void parallel_for(int n, bool parallel, F&& f) {
#if defined(_OPENMP)
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
#else
  (void)parallel;
#endif
  for (int i = 0; i < n; ++i) f(i);
}

inline int hardware_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace phwit
