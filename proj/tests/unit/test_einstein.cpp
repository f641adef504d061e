#include <doctest.h>

#include <cmath>

#include "gyrolab/einstein.hpp"

using namespace gyrolab;

TEST_CASE("einstein addition basics") {
    EinsteinBall e(1.0);
    Vec3 u{0.5, 0, 0}, z{0, 0, 0};
    CHECK(e.dist(e.add(z, u), u) == 0.0);
    CHECK(e.norm(e.add(u, e.inv(u))) < 1e-16);

    // collinear speeds compose like the scalar relativistic sum
    Vec3 v{0.5, 0, 0};
    Vec3 s = e.add(u, v);
    CHECK(s[0] == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(s[1] == 0.0);
    CHECK(s[2] == 0.0);
}

TEST_CASE("lorentz factor") {
    EinsteinBall e(1.0);
    CHECK(e.gamma({0, 0, 0}) == 1.0);
    CHECK(e.gamma({0.6, 0, 0}) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK_THROWS_AS(e.gamma({1.0 - 1e-14, 0, 0}), domain_error);

    EinsteinBall e2(2.0);
    CHECK(e2.gamma({1.2, 0, 0}) == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("einstein domain errors") {
    EinsteinBall e(1.0);
    CHECK_THROWS_AS(e.add({1.0, 0, 0}, {0, 0, 0}), domain_error);
    CHECK_THROWS_AS(e.add({0, 0, 0}, {0.8, 0.8, 0}), domain_error);
    CHECK_THROWS_AS(EinsteinBall(-1.0), domain_error);
}

TEST_CASE("einstein gyration from the gyroassociative rearrangement") {
    EinsteinBall e(1.0);
    Vec3 w{0, 0.2, 0};
    CHECK(e.dist(e.gyr({0, 0, 0}, {0.3, 0, 0}, w), w) < 1e-15);
    // collinear pair: gyration acts trivially
    CHECK(e.dist(e.gyr({0.5, 0, 0}, {0.3, 0, 0}, w), w) < 1e-12);

    auto rng = RngStream::derive(17, "egyr");
    for (int i = 0; i < 20000; ++i) {
        auto u = e.sample(rng);
        auto v = e.sample(rng);
        auto x = e.sample(rng);
        CHECK(std::abs(e.norm(e.gyr(u, v, x)) - e.norm(x)) < 1e-10);
    }
}

TEST_CASE("einstein addition is closed") {
    EinsteinBall e(1.0);
    auto rng = RngStream::derive(23, "eclosure");
    for (int i = 0; i < 20000; ++i) {
        auto u = e.sample(rng);
        auto v = e.sample(rng);
        CHECK(e.norm(e.add(u, v)) < 1.0);
    }
}

TEST_CASE("speed parameter scales the carrier") {
    EinsteinBall e(2.0);
    Vec3 u{1.0, 0, 0}, v{1.0, 0, 0};
    // (u+v)/(1+uv/c^2) = 2/(1+0.25) = 1.6
    CHECK(e.add(u, v)[0] == doctest::Approx(1.6).epsilon(1e-14));
    auto rng = RngStream::derive(29, "cap2");
    for (int i = 0; i < 2000; ++i) CHECK(e.norm(e.sample(rng)) <= 0.99 * 2.0);
}
