#include "reco/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace reco {

int worker_threads() {
    const int available = omp_get_max_threads();
    const char* env = std::getenv("RECO_THREADS");
    if (env == nullptr || *env == '\0') return available;
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap <= 0) return available;
    return static_cast<int>(cap);
}

}  // namespace reco
