#include "berncond/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace berncond {

int maxThreads() {
#ifdef _OPENMP
    if (const char* env = std::getenv("BERNCOND_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return n;
            return 1;
        } catch (...) {
            return omp_get_max_threads();
        }
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void setThreadCount(int n) {
#ifdef _OPENMP
    if (n >= 1) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace berncond
