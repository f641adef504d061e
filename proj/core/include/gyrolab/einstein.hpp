#pragma once

#include <array>
#include <cmath>
#include <string>

#include "gyrolab/errors.hpp"
#include "gyrolab/rng.hpp"

namespace gyrolab {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& u, const Vec3& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}
inline double norm3(const Vec3& u) { return std::sqrt(dot(u, u)); }
inline Vec3 operator+(const Vec3& u, const Vec3& v) {
    return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}
inline Vec3 operator-(const Vec3& u, const Vec3& v) {
    return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
}
inline Vec3 operator-(const Vec3& u) { return {-u[0], -u[1], -u[2]}; }
inline Vec3 operator*(double s, const Vec3& u) {
    return {s * u[0], s * u[1], s * u[2]};
}

std::string format_vec3(const Vec3& v);
Vec3 parse_vec3(std::string_view s); // "x,y,z"

/// The ball of admissible velocities { v : ||v|| < c } under Einstein
/// velocity addition
///
///   u (+) v = (u + v/gamma_u + (gamma_u/(c^2 (1+gamma_u))) <u,v> u)
///             / (1 + <u,v>/c^2),
///
/// with the Lorentz factor gamma_u = 1/sqrt(1 - ||u||^2/c^2). No closed
/// gyration formula is used: gyr[u,v](w) is computed by rearranging the left
/// gyroassociative law as (-(u (+) v)) (+) (u (+) (v (+) w)), which keeps the
/// carrier entirely in terms of the addition.
struct EinsteinBall {
    using element_type = Vec3;

    static constexpr bool exact_carrier = false;
    static constexpr bool has_ball_sampling = true;
    static constexpr bool norm_preserving_gyr = true;

    double c = 1.0;
    double sample_cap = 0.99; // fraction of c

    explicit EinsteinBall(double speed = 1.0) : c(speed) {
        if (!(c > 0.0)) throw domain_error("einstein: speed parameter must be positive");
    }

    element_type identity() const { return {0.0, 0.0, 0.0}; }

    element_type add(const element_type& u, const element_type& v) const {
        require_admissible(u);
        require_admissible(v);
        double c2 = c * c;
        double uv = dot(u, v);
        double gu = gamma(u);
        double f = 1.0 / (1.0 + uv / c2);
        element_type t = u + (1.0 / gu) * v + (gu / (c2 * (1.0 + gu)) * uv) * u;
        return f * t;
    }

    element_type inv(const element_type& u) const {
        require_admissible(u);
        return -u;
    }

    element_type gyr(const element_type& u, const element_type& v,
                     const element_type& w) const {
        element_type s = add(u, v);
        return add(-s, add(u, add(v, w)));
    }

    /// Lorentz factor 1/sqrt(1 - ||u||^2/c^2); diverges toward the boundary,
    /// so speeds within one part in 1e12 of c are rejected.
    double gamma(const element_type& u) const {
        double b2 = dot(u, u) / (c * c);
        if (b2 >= 1.0 - 1e-12)
            throw domain_error("einstein: speed " + std::to_string(std::sqrt(b2)) +
                               "c is at or beyond the Lorentz-factor pole");
        return 1.0 / std::sqrt(1.0 - b2);
    }

    double dist(const element_type& u, const element_type& v) const {
        return norm3(u - v);
    }
    double norm(const element_type& u) const { return norm3(u); }

    bool eq(const element_type& u, const element_type& v, double tol) const {
        return dist(u, v) <= tol;
    }

    element_type sample(RngStream& rng) const { return sample_ball(sample_cap * c, rng); }

    /// Uniform-in-volume point of the ball of the given radius about 0.
    element_type sample_ball(double radius, RngStream& rng) const {
        Vec3 d{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        double n = norm3(d);
        if (n == 0.0) d = {1.0, 0.0, 0.0}, n = 1.0;
        double r = radius * std::cbrt(rng.unit());
        return (r / n) * d;
    }

    std::string name() const { return "einstein"; }
    std::string format(const element_type& u) const { return format_vec3(u); }

private:
    void require_admissible(const element_type& u) const {
        if (!(norm3(u) < c))
            throw domain_error("einstein: velocity " + format_vec3(u) +
                               " is not admissible for c=" + std::to_string(c));
    }
};

} // namespace gyrolab
