#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace gyrolab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic random stream. Every consumer derives its own sub-stream
/// from (master seed, label, index), so adding or reordering consumers never
/// perturbs the draws of another. Doubles are produced from raw engine bits,
/// not std::uniform_real_distribution, so sequences are identical across
/// standard library implementations.
class RngStream {
public:
    static RngStream derive(std::uint64_t seed, std::string_view label,
                            std::uint64_t index = 0) {
        std::uint64_t s = seed ^ fnv1a(label);
        s ^= (index + 1) * 0x9e3779b97f4a7c15ULL;
        std::uint64_t a = splitmix64(s);
        std::uint64_t b = splitmix64(s);
        std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        return RngStream(std::mt19937_64(seq));
    }

    std::uint64_t bits() { return eng_(); }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform index in [0, n). Requires n > 0.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(bits() % n); }

    /// Standard normal deviate (Box-Muller, pair cached).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - unit(); // (0, 1]
        double u2 = unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

private:
    explicit RngStream(std::mt19937_64 eng) : eng_(eng) {}

    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace gyrolab
