#pragma once

// OpenMP helpers. Builds without OpenMP compile the pragmas away and the
// kernels run serially.

#define PVF_STR(s) #s
#ifdef _OPENMP
#include <omp.h>
#define PVF_PARALLEL_FOR_IF(COND) _Pragma(PVF_STR(omp parallel for schedule(dynamic) if (COND)))
#else
#define PVF_PARALLEL_FOR_IF(COND)
#endif

namespace pvf {

inline int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace pvf
