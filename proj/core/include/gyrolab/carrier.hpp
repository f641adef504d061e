#pragma once

#include <concepts>
#include <string>

#include "gyrolab/rng.hpp"

namespace gyrolab {

/// A gyrogroup carrier: identity, addition, inversion, gyration, an ambient
/// metric and norm, tolerance equality and seeded sampling. Carriers are
/// immutable values; every operation on them is a pure function.
///
/// Static traits:
///   exact_carrier       operations and equality are exact (tables, integers)
///   has_ball_sampling   norm balls about the identity can be sampled
///   norm_preserving_gyr gyrations are declared isometries of the ambient norm
template <typename C>
concept GyroCarrier = requires(const C& g, const typename C::element_type& a,
                               const typename C::element_type& b,
                               const typename C::element_type& z, RngStream& rng,
                               double tol) {
    typename C::element_type;
    { g.identity() } -> std::convertible_to<typename C::element_type>;
    { g.add(a, b) } -> std::convertible_to<typename C::element_type>;
    { g.inv(a) } -> std::convertible_to<typename C::element_type>;
    { g.gyr(a, b, z) } -> std::convertible_to<typename C::element_type>;
    { g.dist(a, b) } -> std::convertible_to<double>;
    { g.norm(a) } -> std::convertible_to<double>;
    { g.eq(a, b, tol) } -> std::convertible_to<bool>;
    { g.sample(rng) } -> std::convertible_to<typename C::element_type>;
    { g.name() } -> std::convertible_to<std::string>;
    { g.format(a) } -> std::convertible_to<std::string>;
    { C::exact_carrier } -> std::convertible_to<bool>;
    { C::has_ball_sampling } -> std::convertible_to<bool>;
    { C::norm_preserving_gyr } -> std::convertible_to<bool>;
};

/// Carrier whose norm balls about the identity can be sampled.
template <typename C>
concept BallSamplingCarrier =
    GyroCarrier<C> && C::has_ball_sampling &&
    requires(const C& g, double r, RngStream& rng) {
        { g.sample_ball(r, rng) } -> std::convertible_to<typename C::element_type>;
    };

/// Norm of the left-cancellation offset u = (-a) (+) b. The point b lies in
/// the translated ball a (+) U_r exactly when this value is <= r, because
/// a (+) ((-a) (+) b) = b in every gyrogroup.
template <GyroCarrier G>
double gyro_offset_norm(const G& g, const typename G::element_type& a,
                        const typename G::element_type& b) {
    return g.norm(g.add(g.inv(a), b));
}

} // namespace gyrolab
