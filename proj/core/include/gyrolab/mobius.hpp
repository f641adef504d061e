#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "gyrolab/errors.hpp"
#include "gyrolab/rng.hpp"

namespace gyrolab {

std::string format_complex(std::complex<double> z);
std::complex<double> parse_complex(std::string_view s); // "a+bi" form

/// The open unit disk under Mobius addition
///
///     a (+) b = (a + b) / (1 + conj(a) b),
///     gyr[a,b](c) = ((1 + a conj(b)) / (1 + conj(a) b)) c.
///
/// The gyration factor is a quotient of complex conjugates, so it has unit
/// modulus and gyrations are Euclidean rotations. Random sampling is uniform
/// in area with modulus capped at sample_cap to keep the denominators away
/// from zero.
struct MobiusDisk {
    using element_type = std::complex<double>;

    static constexpr bool exact_carrier = false;
    static constexpr bool has_ball_sampling = true;
    static constexpr bool norm_preserving_gyr = true;

    double sample_cap = 0.99;

    element_type identity() const { return {0.0, 0.0}; }

    element_type add(element_type a, element_type b) const {
        require_inside(a);
        require_inside(b);
        return (a + b) / (1.0 + std::conj(a) * b);
    }

    element_type inv(element_type a) const {
        require_inside(a);
        return -a;
    }

    element_type gyr(element_type a, element_type b, element_type c) const {
        require_inside(a);
        require_inside(b);
        return ((1.0 + a * std::conj(b)) / (1.0 + std::conj(a) * b)) * c;
    }

    double dist(element_type a, element_type b) const { return std::abs(a - b); }
    double norm(element_type a) const { return std::abs(a); }

    bool eq(element_type a, element_type b, double tol) const {
        return dist(a, b) <= tol;
    }

    element_type sample(RngStream& rng) const {
        double r = sample_cap * std::sqrt(rng.unit());
        double t = 6.283185307179586476925287 * rng.unit();
        return {r * std::cos(t), r * std::sin(t)};
    }

    /// Uniform-in-area point of the norm ball about 0 with the given radius.
    element_type sample_ball(double radius, RngStream& rng) const {
        double r = radius * std::sqrt(rng.unit());
        double t = 6.283185307179586476925287 * rng.unit();
        return {r * std::cos(t), r * std::sin(t)};
    }

    std::string name() const { return "mobius"; }
    std::string format(element_type a) const { return format_complex(a); }

private:
    void require_inside(element_type a) const {
        if (!(std::abs(a) < 1.0))
            throw domain_error("mobius: point " + format_complex(a) +
                               " lies on or outside the open unit disk");
    }
};

struct NonassociativityWitness {
    std::complex<double> lhs;
    std::complex<double> rhs;
    double gap;
};

/// Evaluates both associations of the triple (1/2, i/2, -1/2), where Mobius
/// addition visibly fails to associate. The exact gap is 3/sqrt(221).
inline NonassociativityWitness mobius_nonassociativity_witness() {
    MobiusDisk d;
    std::complex<double> x{0.5, 0.0}, y{0.0, 0.5}, z{-0.5, 0.0};
    NonassociativityWitness w;
    w.lhs = d.add(d.add(x, y), z);
    w.rhs = d.add(x, d.add(y, z));
    w.gap = std::abs(w.lhs - w.rhs);
    return w;
}

} // namespace gyrolab
