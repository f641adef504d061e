#include <doctest.h>

#include <set>

#include "gyrolab/suitable.hpp"

using namespace gyrolab;
using Cx = std::complex<double>;

static ConstructionConfig small_cfg() {
    ConstructionConfig cfg;
    cfg.radius_schedule = {0.4, 0.2, 0.1};
    cfg.word_cap = 6;
    cfg.cloud_size = 200;
    cfg.dedup_tol = 1e-3;
    cfg.seed = 7;
    cfg.density_delta = 0.1;
    cfg.density_min = 0.9;
    cfg.closure_budget = 400000;
    return cfg;
}

TEST_CASE("finite construction on standard fixtures") {
    auto z4 = cyclic_group_table(4);
    auto res = suitable_finite(z4);
    CHECK(res.points == std::vector<int>{1});
    CHECK(verify_suitable(z4, res.points, small_cfg()).at("pass").get<bool>());

    auto klein = klein_four_table();
    auto kres = suitable_finite(klein);
    CHECK(kres.points.size() == 2);
    CHECK(verify_suitable(klein, kres.points, small_cfg()).at("pass").get<bool>());

    auto trivial = cyclic_group_table(1);
    auto tres = suitable_finite(trivial);
    CHECK(tres.points.empty());
    CHECK(verify_suitable(trivial, tres.points, small_cfg()).at("pass").get<bool>());
}

TEST_CASE("stepwise trace on the cyclic group") {
    auto z4 = cyclic_group_table(4);
    std::vector<int> natural{0, 1, 2, 3};
    auto res = suitable_countable_trace(z4, natural);
    CHECK(res.trace.size() == 4); // one row per enumerated element
    // final set generates the carrier and excludes the identity
    CHECK(z4.closure(res.points) == std::vector<int>{0, 1, 2, 3});
    for (int p : res.points) CHECK(p != 0);
    CHECK(res.excluded_identity); // S_0 = {0} was stripped
    CHECK(verify_suitable(z4, res.points, small_cfg()).at("pass").get<bool>());

    // a reversed enumeration also completes
    std::vector<int> reversed{3, 2, 1, 0};
    auto rres = suitable_countable_trace(z4, reversed);
    CHECK(z4.closure(rres.points) == std::vector<int>{0, 1, 2, 3});

    CHECK_THROWS_AS(suitable_countable_trace(z4, {0, 1}), precondition_error);
    CHECK_THROWS_AS(suitable_countable_trace(z4, {0, 1, 2, 2}), precondition_error);
}

TEST_CASE("coset extension over an L-subgyrogroup") {
    auto z4 = cyclic_group_table(4);
    auto res = extend_via_open_subgyro(z4, {0, 2}, {2});
    std::set<int> pts(res.points.begin(), res.points.end());
    CHECK(pts == std::set<int>{1, 2});
    CHECK(z4.closure(res.points) == std::vector<int>{0, 1, 2, 3});
    CHECK(verify_suitable(z4, res.points, small_cfg()).at("pass").get<bool>());

    // H = G: no representatives beyond S_H
    auto whole = extend_via_open_subgyro(z4, {0, 1, 2, 3}, {1});
    CHECK(whole.points == std::vector<int>{1});

    // H = {0}: everything except the identity
    auto bottom = extend_via_open_subgyro(z4, {0}, {});
    std::set<int> all(bottom.points.begin(), bottom.points.end());
    CHECK(all == std::set<int>{1, 2, 3});

    CHECK_THROWS_AS(extend_via_open_subgyro(z4, {0, 2}, {}), precondition_error);
}

TEST_CASE("coset extension via enumeration") {
    auto z4 = cyclic_group_table(4);
    auto res = extend_via_enumeration(z4, {0, 2}, {2}, {0, 1, 2, 3});
    std::set<int> pts(res.points.begin(), res.points.end());
    CHECK(pts == std::set<int>{1, 2}); // B = {0, 1}, 0 stripped
    CHECK(res.excluded_identity);

    // a different enumeration picks a different representative but still works
    auto res2 = extend_via_enumeration(z4, {0, 2}, {2}, {0, 3, 2, 1});
    std::set<int> pts2(res2.points.begin(), res2.points.end());
    CHECK(pts2 == std::set<int>{2, 3});

    // single-coset case: B = {0} only
    auto single = extend_via_enumeration(z4, {0, 1, 2, 3}, {1}, {0, 1, 2, 3});
    CHECK(single.points == std::vector<int>{1});

    CHECK_THROWS_AS(extend_via_enumeration(z4, {0, 2}, {2}, {1, 0, 2, 3}),
                    precondition_error);
}

TEST_CASE("nonprecompact path on the integers") {
    IntegerGyro z;
    auto res = suitable_nonprecompact(z, 0.5, 100);
    CHECK(res.excluded_identity);
    CHECK(res.points.size() >= 100);
    CHECK(res.density_report.at("fraction").get<double>() == 1.0);

    auto tiny = suitable_nonprecompact(z, 0.5, 1);
    CHECK(tiny.points.size() <= 2);
}

TEST_CASE("nonprecompact path rejects covering carriers") {
    MobiusDisk d;
    CHECK_THROWS_AS(suitable_nonprecompact(d, 0.5, 100), construction_error);
}

TEST_CASE("disk construction completes at a short schedule") {
    MobiusDisk d;
    auto cfg = small_cfg();
    std::vector<Cx> gens{{0.5, 0}, {0, 0.5}};
    auto res = suitable_precompact_disk(d, gens, cfg);
    CHECK(res.points.size() > 10);
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
        const auto& row = res.trace[i];
        if (!row.contains("cover_fraction")) continue;
        CHECK(row.at("cover_fraction").get<double>() == 1.0);
    }
    // identical config and seed reproduce the serialized result bit for bit
    auto res2 = suitable_precompact_disk(d, gens, cfg);
    CHECK(suitable_result_json(d, res).dump() == suitable_result_json(d, res2).dump());

    CHECK_THROWS_AS(suitable_precompact_disk(d, {}, cfg), precondition_error);
    // a generator whose closure is not dense fails the precondition
    CHECK_THROWS_AS(suitable_precompact_disk(d, {Cx{0.5, 0}}, cfg), precondition_error);
}

TEST_CASE("compact variant needs a contracted schedule") {
    MobiusDisk d;
    std::vector<Cx> gens{{0.5, 0}, {0, 0.5}};
    auto cfg = small_cfg();
    CHECK_THROWS_AS(suitable_compact_metrizable(d, gens, cfg), precondition_error);

    auto table_res = suitable_compact_metrizable(cyclic_group_table(4));
    CHECK(table_res.points == std::vector<int>{1});
}

TEST_CASE("verification verdicts") {
    MobiusDisk d;
    auto cfg = small_cfg();
    // a single real generator only fills the diameter: density fails
    auto v = verify_suitable(d, {Cx{0.5, 0}}, cfg);
    CHECK_FALSE(v.at("pass").get<bool>());
    CHECK_FALSE(v.at("density_pass").get<bool>());
    CHECK(v.at("zero_excluded").get<bool>());

    // the empty set on a nontrivial carrier fails density
    auto empty = verify_suitable(d, {}, cfg);
    CHECK_FALSE(empty.at("pass").get<bool>());

    // sets containing the identity are rejected
    auto z4 = cyclic_group_table(4);
    auto withzero = verify_suitable(z4, {0, 1}, cfg);
    CHECK_FALSE(withzero.at("zero_excluded").get<bool>());
}

TEST_CASE("config validation") {
    ConstructionConfig bad;
    bad.radius_schedule = {0.1, 0.2};
    CHECK_THROWS_AS(bad.validate(), precondition_error);
    bad.radius_schedule = {};
    CHECK_THROWS_AS(bad.validate(), precondition_error);
    bad.radius_schedule = {0.4, 0.2};
    bad.word_cap = 1;
    CHECK_THROWS_AS(bad.validate(), precondition_error);
}
