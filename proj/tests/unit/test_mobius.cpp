#include <doctest.h>

#include <cmath>

#include "gyrolab/mobius.hpp"

using namespace gyrolab;
using Cx = std::complex<double>;

TEST_CASE("mobius addition basics") {
    MobiusDisk d;
    CHECK(d.add({0, 0}, {0, 0.7}) == Cx{0, 0.7});
    CHECK(std::abs(d.add({0.5, 0}, {-0.5, 0})) == 0.0);

    // exact value of 0.5 (+) 0.5i is (10 + 6i)/17
    Cx v = d.add({0.5, 0}, {0, 0.5});
    CHECK(std::abs(v - Cx{10.0 / 17.0, 6.0 / 17.0}) < 1e-16);
}

TEST_CASE("mobius addition stays inside the disk") {
    MobiusDisk d;
    auto rng = RngStream::derive(11, "disk_closure");
    for (int i = 0; i < 20000; ++i) {
        auto a = d.sample(rng);
        auto b = d.sample(rng);
        CHECK(std::abs(d.add(a, b)) < 1.0);
    }
}

TEST_CASE("mobius domain errors") {
    MobiusDisk d;
    CHECK_THROWS_AS(d.add({1.0, 0.0}, {0, 0}), domain_error);
    CHECK_THROWS_AS(d.add({0, 0}, {0.8, 0.7}), domain_error);
    CHECK_THROWS_AS(d.inv({1.2, 0}), domain_error);
}

TEST_CASE("mobius gyration is a rotation") {
    MobiusDisk d;
    Cx a{0.5, 0}, b{0, 0.5}, c{0.1, 0};
    Cx got = d.gyr(a, b, c);
    // 0.1 (1 - i/4)/(1 + i/4) = 0.1 (0.9375 - 0.5i)/1.0625
    Cx expect = 0.1 * Cx{0.9375, -0.5} / 1.0625;
    CHECK(std::abs(got - expect) < 1e-16);
    CHECK(std::abs(std::abs(got) - 0.1) < 1e-15);

    CHECK(d.gyr(a, a, c) == c);      // factor 1 when a = b
    CHECK(d.gyr(a, {0, 0}, c) == c); // factor 1 when b = 0

    auto rng = RngStream::derive(3, "gyr_mod");
    for (int i = 0; i < 20000; ++i) {
        auto x = d.sample(rng);
        auto y = d.sample(rng);
        auto z = d.sample(rng);
        CHECK(std::abs(std::abs(d.gyr(x, y, z)) - std::abs(z)) < 1e-14);
    }
}

TEST_CASE("nonassociativity witness triple") {
    auto w = mobius_nonassociativity_witness();
    CHECK(w.gap > 0.01);
    // independent closed form: both associations differ by exactly 3/sqrt(221)
    CHECK(w.gap == doctest::Approx(3.0 / std::sqrt(221.0)).epsilon(1e-12));
    CHECK(std::abs(w.lhs - Cx{8.0 / 34.0, 15.0 / 34.0}) < 1e-15);
    CHECK(std::abs(w.rhs - Cx{10.0 / 26.0, 15.0 / 26.0}) < 1e-15);
}

TEST_CASE("association gap vanishes with a zero or collinear real triple") {
    MobiusDisk d;
    Cx x{0.3, 0.2}, y{-0.4, 0.1};
    CHECK(std::abs(d.add(d.add(x, y), {0, 0}) - d.add(x, d.add(y, {0, 0}))) == 0.0);

    // real inputs stay real: the diameter is a one-dimensional subcarrier
    Cx a{0.3, 0}, b{0.4, 0}, c{0.2, 0};
    Cx lhs = d.add(d.add(a, b), c);
    Cx rhs = d.add(a, d.add(b, c));
    CHECK(std::abs(lhs - rhs) < 1e-15);
    CHECK(std::abs(lhs.imag()) < 1e-16);
}

TEST_CASE("mobius sampling respects the cap") {
    MobiusDisk d;
    auto rng = RngStream::derive(5, "cap");
    for (int i = 0; i < 5000; ++i) CHECK(std::abs(d.sample(rng)) <= d.sample_cap);
}
