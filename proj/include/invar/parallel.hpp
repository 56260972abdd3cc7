#pragma once

#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invar {

// Execution mode for the batch kernels. Every parallel loop writes only
// state owned by its index, so both modes produce identical results; the
// serial mode is the reference the tests compare against.
enum class Exec { serial, parallel };

inline Exec default_exec() {
#ifdef _OPENMP
    return Exec::parallel;
#else
    return Exec::serial;
#endif
}

template <typename F>
void par_for(size_t n, Exec mode, F&& f) {
#ifdef _OPENMP
    if (mode == Exec::parallel && n > 1) {
        std::exception_ptr err;
        #pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < (long)n; ++i) {
            try {
                f((size_t)i);
            } catch (...) {
                #pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#endif
    (void)mode;
    for (size_t i = 0; i < n; ++i) f(i);
}

} // namespace invar
