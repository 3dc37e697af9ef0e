#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cutcx {

inline int worker_count()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Sets the OpenMP team size for subsequent kernels. No-op without OpenMP.
inline void set_worker_count(int workers)
{
#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#else
    (void)workers;
#endif
}

}  // namespace cutcx
