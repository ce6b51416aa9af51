#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace reco {

// Worker count for parallel kernels. RECO_THREADS caps it; unset, empty or 0 means the
// OpenMP default.
int worker_threads();

// Runs body(k) for k in [0, n) across worker_threads() threads with a static schedule.
// The first exception thrown by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static) num_threads(worker_threads())
    for (long long k = 0; k < count; ++k) {
        try {
            body(static_cast<std::size_t>(k));
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace reco
