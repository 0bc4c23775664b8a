#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frio {

// Execution policy for the data-parallel kernels. Every kernel offers a
// serial path that computes bit-identical results to the OpenMP path; the
// serial path doubles as the reference implementation in tests and in the
// benchmark tool.
enum class ExecMode { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs body(i) for i in [0, n). Iterations must be independent; results
// must be written to disjoint slots so that scheduling cannot affect them.
template <class F>
void parallel_for(std::int64_t n, ExecMode mode, F&& body) {
#ifdef _OPENMP
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
#else
  (void)mode;
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    body(i);
  }
}

}  // namespace frio
