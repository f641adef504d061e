#pragma once

#include <cmath>
#include <cstdlib>
#include <string>

#include "gyrolab/rng.hpp"

namespace gyrolab {

/// The integers under ordinary addition, viewed as a group-induced gyrogroup
/// (all gyrations are the identity). The carrier is infinite and discrete;
/// it is exposed through a lazy enumeration 0, 1, -1, 2, -2, ... and random
/// sampling draws uniformly from a prefix of that enumeration.
struct IntegerGyro {
    using element_type = long long;

    static constexpr bool exact_carrier = true;
    static constexpr bool has_ball_sampling = true;
    static constexpr bool norm_preserving_gyr = true;

    std::size_t enum_cap = 10001; // sampling prefix of the enumeration

    element_type identity() const { return 0; }
    element_type add(element_type a, element_type b) const { return a + b; }
    element_type inv(element_type a) const { return -a; }
    element_type gyr(element_type, element_type, element_type z) const { return z; }
    double dist(element_type a, element_type b) const {
        return std::abs(static_cast<double>(a - b));
    }
    double norm(element_type a) const { return std::abs(static_cast<double>(a)); }
    bool eq(element_type a, element_type b, double) const { return a == b; }

    /// i-th element of the enumeration 0, 1, -1, 2, -2, ...
    static element_type enumerate(std::size_t i) {
        if (i == 0) return 0;
        auto k = static_cast<element_type>((i + 1) / 2);
        return (i % 2 == 1) ? k : -k;
    }

    element_type sample(RngStream& rng) const { return enumerate(rng.index(enum_cap)); }

    element_type sample_ball(double radius, RngStream& rng) const {
        auto m = static_cast<long long>(std::floor(radius));
        if (m <= 0) return 0;
        return static_cast<element_type>(rng.index(2 * static_cast<std::size_t>(m) + 1)) - m;
    }

    std::string name() const { return "integers"; }
    std::string format(element_type a) const { return std::to_string(a); }
};

} // namespace gyrolab
