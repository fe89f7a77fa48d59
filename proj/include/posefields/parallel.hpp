#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace posefields {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

/// Runs f(k) for k in [0, n). Iterations must be independent; results are
/// identical to the serial loop because no cross-iteration state is shared.
template <class F>
void parallel_for(int n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n; ++k) f(k);
#else
    for (int k = 0; k < n; ++k) f(k);
#endif
}

} // namespace posefields
