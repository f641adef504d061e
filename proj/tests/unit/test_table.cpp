#include <doctest.h>

#include <fstream>

#include "gyrolab/table.hpp"
#include "gyrolab/io.hpp"

using namespace gyrolab;

#ifndef GYROLAB_FIXTURE_DIR
#define GYROLAB_FIXTURE_DIR "tests/fixtures"
#endif

static std::string fixture(const std::string& name) {
    return std::string(GYROLAB_FIXTURE_DIR) + "/" + name;
}

TEST_CASE("cyclic and klein fixtures validate with zero residuals") {
    for (auto t : {cyclic_group_table(4), klein_four_table()}) {
        auto rep = t.validate();
        CHECK(rep.pass());
        for (const auto& e : rep.entries) CHECK(e.residual == 0.0);
        CHECK(t.group_induced_gyr());
    }
}

TEST_CASE("order-8 nontrivial gyrogroup fixture validates") {
    auto t = TableGyro::load(fixture("g8.json"));
    CHECK(t.order() == 8);
    CHECK_FALSE(t.group_induced_gyr());
    auto rep = t.validate();
    CHECK(rep.pass());
    // it is not associative: some triple needs a nontrivial gyration
    bool nonassoc = false;
    for (int x = 0; x < 8 && !nonassoc; ++x)
        for (int y = 0; y < 8 && !nonassoc; ++y)
            for (int z = 0; z < 8; ++z)
                if (t.add(t.add(x, y), z) != t.add(x, t.add(y, z))) {
                    nonassoc = true;
                    break;
                }
    CHECK(nonassoc);
}

TEST_CASE("corrupted entries are detected with a witness") {
    // flip one addition entry of the cyclic group
    std::vector<std::vector<int>> add{{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
    add[1][2] = 0; // was 3
    auto rep = TableGyro::group_induced(add).validate();
    CHECK_FALSE(rep.pass());
    bool witnessed = false;
    for (const auto& e : rep.entries)
        if (!e.pass() && !e.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("table json round trip and format errors") {
    auto t = TableGyro::load(fixture("g8.json"));
    auto t2 = TableGyro::from_json_text(t.to_json_text());
    CHECK(t2.order() == t.order());
    CHECK(t2.validate().pass());

    CHECK_THROWS_AS(TableGyro::load(fixture("bad_table.json")), format_error);
    CHECK_THROWS_AS(TableGyro::from_json_text("not json"), format_error);
    CHECK_THROWS_AS(TableGyro::from_json_text("{\"order\": 2}"), format_error);
    CHECK_THROWS_AS(TableGyro::load(fixture("missing.json")), format_error);
}

TEST_CASE("lsub and cosets on the cyclic group") {
    auto z4 = cyclic_group_table(4);
    CHECK(z4.lsub_check({0}));
    CHECK(z4.lsub_check({0, 2}));
    CHECK(z4.lsub_check({0, 1, 2, 3}));
    CHECK_THROWS_AS(z4.lsub_check({1, 2}), precondition_error); // not closed
    CHECK_THROWS_AS(z4.lsub_check({}), precondition_error);

    auto part = z4.coset_decompose({0, 2});
    REQUIRE(part.valid);
    REQUIRE(part.blocks.size() == 2);
    CHECK(part.blocks[0] == std::vector<int>{0, 2});
    CHECK(part.blocks[1] == std::vector<int>{1, 3});
    CHECK(part.representatives == std::vector<int>{0, 1});

    auto single = z4.coset_decompose({0, 1, 2, 3});
    REQUIRE(single.valid);
    CHECK(single.blocks.size() == 1);

    auto singletons = z4.coset_decompose({0});
    REQUIRE(singletons.valid);
    CHECK(singletons.blocks.size() == 4);
}

TEST_CASE("lsub on the nontrivial order-8 table") {
    auto g8 = TableGyro::load(fixture("g8.json"));
    CHECK(g8.lsub_check({0, 1}));
    CHECK(g8.closure({1}) == std::vector<int>{0, 1});
}

TEST_CASE("exact closure under addition, inverses and gyrations") {
    auto z4 = cyclic_group_table(4);
    CHECK(z4.closure({1}) == std::vector<int>{0, 1, 2, 3});
    CHECK(z4.closure({2}) == std::vector<int>{0, 2});
    CHECK(z4.closure({}) == std::vector<int>{0});
}
