#ifndef QREAL_PARALLEL_HPP
#define QREAL_PARALLEL_HPP

#include <omp.h>

#include <exception>
#include <mutex>

namespace qreal {

/// Runs body(i) for i in [0, n) on the OpenMP team with dynamic scheduling,
/// using `threads` threads when positive and the default team otherwise.
/// The first exception thrown by any iteration is rethrown on the caller's
/// thread once the loop finishes; later iterations still run.
template <class Body>
void parallel_for(long n, Body&& body, int threads = 0)
{
    const int team = threads > 0 ? threads : omp_get_max_threads();
    std::exception_ptr failure;
    std::mutex guard;
#pragma omp parallel for schedule(dynamic) num_threads(team)
    for (long i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            const std::lock_guard<std::mutex> lock(guard);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace qreal

#endif
