#include "gyrolab/axioms.hpp"

#include <cstdlib>

namespace gyrolab {

std::size_t worker_count() {
    const char* env = std::getenv("GYRO_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v <= 1) return 1;
    const std::size_t hw = std::thread::hardware_concurrency();
    return std::min<std::size_t>(static_cast<std::size_t>(v), hw > 0 ? hw : 1);
}

} // namespace gyrolab
