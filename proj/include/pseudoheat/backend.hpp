#pragma once
/**
 * @file backend.hpp
 * @brief Serial / OpenMP execution policies for embarrassingly parallel
 *        index loops (grid sweeps, lattice rows).
 *
 * Both backends produce bitwise-identical results: each index writes only its
 * own slots, and every reduction in the library is performed afterwards in
 * ascending index order. The serial backend is the reference implementation
 * kept for testing; equality between the two is asserted in the test suite.
 */

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace pseudoheat {

enum class Backend { serial, openmp };

/// Default backend: OpenMP when compiled in, serial otherwise.
inline Backend default_backend() {
#if defined(_OPENMP)
    return Backend::openmp;
#else
    return Backend::serial;
#endif
}

/// Apply f(i) for i in [0, n). f must only touch state owned by index i.
template <class F>
void parallel_for(Backend b, long long n, F&& f) {
#if defined(_OPENMP)
    if (b == Backend::openmp) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < n; ++i) f(i);
        return;
    }
#else
    (void)b;
#endif
    for (long long i = 0; i < n; ++i) f(i);
}

} // namespace pseudoheat
