#ifndef LGCORR_PARALLEL_HPP
#define LGCORR_PARALLEL_HPP

#include "lgcorr/mp_complex.hpp"

#include <omp.h>

namespace lgcorr {

// Serial reference path is kept selectable everywhere a kernel is
// parallelized so the two can be compared in tests and benchmarks.
enum class ExecMode { Serial, OpenMP };

template <class F>
void parallel_for(long n, ExecMode mode, F&& fn)
{
    if (mode == ExecMode::Serial) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
#pragma omp parallel
    {
        apply_thread_precision();
#pragma omp for schedule(dynamic)
        for (long i = 0; i < n; ++i) fn(i);
    }
}

} // namespace lgcorr

#endif
