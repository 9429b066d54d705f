#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tvw {

// threads semantics shared by the enumeration kernels: 1 runs the serial
// reference loop, 0 all available OpenMP threads, k > 1 exactly k threads.
// Results are written to caller-provided per-index slots, so the outcome is
// identical on every path.
inline int resolve_threads(int threads) {
#ifdef _OPENMP
    if (threads <= 0) return omp_get_max_threads();
    return threads;
#else
    (void)threads;
    return 1;
#endif
}

template <class F>
void parallel_for_indexed(int threads, std::size_t count, F&& body) {
    const int t = resolve_threads(threads);
    if (t <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(t)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
        body(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < count; ++i) body(i);
#endif
}

} // namespace tvw
