#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace igk {

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

// Static-schedule parallel loop over [0, n). The body must only write state
// owned by iteration i so results are identical for any thread count.
template <typename F>
void parallel_for(long n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) body(i);
#else
    for (long i = 0; i < n; ++i) body(i);
#endif
}

} // namespace igk
