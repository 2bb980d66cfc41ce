#include "seashell/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seashell {

int effective_threads(int requested) {
#ifdef _OPENMP
    int n = requested > 0 ? requested : omp_get_max_threads();
#else
    int n = requested > 0 ? requested : 1;
#endif
    if (const char* env = std::getenv("SEASHELL_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0) n = std::min(n, cap);
        } catch (...) {
            // unparsable values are ignored
        }
    }
    return n > 0 ? n : 1;
}

} // namespace seashell
