#include <doctest.h>

#include "gyrolab/axioms.hpp"
#include "gyrolab/einstein.hpp"
#include "gyrolab/integers.hpp"
#include "gyrolab/mobius.hpp"
#include "gyrolab/table.hpp"

using namespace gyrolab;

TEST_CASE("group tables have exactly zero residuals on every check") {
    auto z4 = cyclic_group_table(4);
    AxiomSuiteParams p;
    p.samples = 2000;
    auto rep = run_axiom_suite(z4, p);
    CHECK(rep.pass());
    for (const auto& e : rep.entries) CHECK(e.residual == 0.0);
    CHECK(rep.notes.size() == 1); // ball invariance skipped on tables
}

TEST_CASE("nontrivial table passes all sampled checks exactly") {
    auto g8 = TableGyro::load(std::string(GYROLAB_FIXTURE_DIR) + "/g8.json");
    AxiomSuiteParams p;
    p.samples = 4000;
    auto rep = run_axiom_suite(g8, p);
    CHECK(rep.pass());
    CHECK(rep.max_residual() == 0.0);
}

TEST_CASE("mobius disk passes the axiom suite at unit scale") {
    MobiusDisk d;
    AxiomSuiteParams p;
    p.samples = 5000;
    p.tol = 1e-9;
    p.seed = 42;
    auto rep = run_axiom_suite(d, p);
    CHECK(rep.pass());
    CHECK(rep.find("gyroassociativity") != nullptr);
    CHECK(rep.find("left_loop") != nullptr);
    for (const auto& e : rep.entries) {
        CHECK(e.samples > 0);
        if (!e.witness.empty()) CHECK(e.witness.size() <= 4);
    }
}

TEST_CASE("einstein ball passes the axiom suite at unit scale") {
    EinsteinBall e(1.0);
    AxiomSuiteParams p;
    p.samples = 5000;
    p.tol = 1e-9;
    p.seed = 7;
    auto rep = run_axiom_suite(e, p);
    CHECK(rep.pass());
}

TEST_CASE("integers are a group-induced carrier with zero residuals") {
    IntegerGyro z;
    AxiomSuiteParams p;
    p.samples = 2000;
    p.ball_radii = {5.0, 50.0};
    auto rep = run_axiom_suite(z, p);
    CHECK(rep.pass());
    CHECK(rep.max_residual() == 0.0);
}

TEST_CASE("gyrations with an identity argument act trivially") {
    MobiusDisk d;
    auto rng = RngStream::derive(31, "gyr_zero");
    for (int i = 0; i < 5000; ++i) {
        auto a = d.sample(rng);
        auto z = d.sample(rng);
        CHECK(std::abs(d.gyr(a, {0, 0}, z) - z) < 1e-15);
        CHECK(std::abs(d.gyr({0, 0}, a, z) - z) < 1e-15);
    }
}

TEST_CASE("ball invariance is unsupported on raw tables") {
    auto z4 = cyclic_group_table(4);
    CHECK_THROWS_AS(check_strong_ball_invariance(z4, {0.5}, 100, 1e-9, 0),
                    unsupported_error);
}

TEST_CASE("parameter preconditions") {
    MobiusDisk d;
    CHECK_THROWS_AS(check_identity_inverse(d, 0, 1e-9, 0), precondition_error);
    CHECK_THROWS_AS(check_gyroassociativity(d, 100, 0.0, 0), precondition_error);
    CHECK_THROWS_AS(check_left_loop(d, 100, 0, 1e-9, 0), precondition_error);
    CHECK_THROWS_AS(check_strong_ball_invariance(d, {}, 100, 1e-9, 0), precondition_error);
    CHECK_THROWS_AS(check_strong_ball_invariance(d, {-0.5}, 100, 1e-9, 0),
                    precondition_error);
}

TEST_CASE("checks are deterministic for a fixed seed") {
    MobiusDisk d;
    auto a = check_gyroassociativity(d, 3000, 1e-9, 123);
    auto b = check_gyroassociativity(d, 3000, 1e-9, 123);
    CHECK(a.entries[0].residual == b.entries[0].residual);
    CHECK(a.entries[0].witness == b.entries[0].witness);
    auto c = check_gyroassociativity(d, 3000, 1e-9, 124);
    CHECK(c.entries[0].residual != a.entries[0].residual);
}
