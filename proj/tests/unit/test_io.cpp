#include <doctest.h>

#include "gyrolab/io.hpp"
#include "gyrolab/mobius.hpp"
#include "gyrolab/report.hpp"

#include <json.hpp>

using namespace gyrolab;
using Cx = std::complex<double>;

TEST_CASE("complex literals") {
    CHECK(parse_complex("0.5") == Cx{0.5, 0});
    CHECK(parse_complex("-0.5") == Cx{-0.5, 0});
    CHECK(parse_complex("0.5i") == Cx{0, 0.5});
    CHECK(parse_complex("-0.25i") == Cx{0, -0.25});
    CHECK(parse_complex("i") == Cx{0, 1});
    CHECK(parse_complex("-i") == Cx{0, -1});
    CHECK(parse_complex("0.5+0.5i") == Cx{0.5, 0.5});
    CHECK(parse_complex("0.5-0.5i") == Cx{0.5, -0.5});
    CHECK(parse_complex("1e-3+2e-2i") == Cx{1e-3, 2e-2});
    CHECK(parse_complex(" 0.1 + 0.2i ") == Cx{0.1, 0.2});
    CHECK_THROWS_AS(parse_complex(""), format_error);
    CHECK_THROWS_AS(parse_complex("abc"), format_error);
    CHECK_THROWS_AS(parse_complex("1+2"), format_error);

    for (Cx z : {Cx{0.25, 0}, Cx{0, -0.75}, Cx{-0.125, 0.375}, Cx{1e-7, -2e-9}})
        CHECK(parse_complex(format_complex(z)) == z);
}

TEST_CASE("vector literals") {
    Vec3 v = parse_vec3("0.1,0.2,-0.3");
    CHECK(v == Vec3{0.1, 0.2, -0.3});
    CHECK(parse_vec3(format_vec3(v)) == v);
    CHECK_THROWS_AS(parse_vec3("1,2"), format_error);
    CHECK_THROWS_AS(parse_vec3("a,b,c"), format_error);
}

TEST_CASE("point CSV round trips") {
    std::vector<Cx> disk{{0.1, -0.2}, {0.995, 0}, {0, 0}};
    CHECK(parse_disk_csv(points_csv(disk)) == disk);

    std::vector<Vec3> ball{{0.1, 0.2, 0.3}, {0, 0, 0}};
    CHECK(parse_ball_csv(points_csv(ball)) == ball);

    std::vector<long long> idx{0, 5, -3};
    CHECK(parse_index_csv(points_csv(idx)) == idx);

    CHECK_THROWS_AS(parse_disk_csv("x,y\n1,2\n"), format_error);
    CHECK_THROWS_AS(parse_disk_csv("re,im\n1\n"), format_error);
}

TEST_CASE("axiom reports serialize to the documented shape") {
    AxiomReport rep;
    rep.carrier = "mobius";
    rep.entries.push_back({"gyroassociativity", 1e-12, 1e-9, {"0.5", "0.5i"}, 1000, 42});
    auto j = nlohmann::json::parse(report_to_json_text(rep));
    CHECK(j.at("carrier") == "mobius");
    CHECK(j.at("pass") == true);
    const auto& e = j.at("entries").at(0);
    CHECK(e.at("axiom") == "gyroassociativity");
    CHECK(e.at("residual").get<double>() == 1e-12);
    CHECK(e.at("tolerance").get<double>() == 1e-9);
    CHECK(e.at("witness").size() == 2);
    CHECK(e.at("samples").get<std::size_t>() == 1000);
    CHECK(e.at("seed").get<std::uint64_t>() == 42);
}

TEST_CASE("derived rng streams are stable and label-separated") {
    auto a = RngStream::derive(1, "alpha");
    auto b = RngStream::derive(1, "alpha");
    auto c = RngStream::derive(1, "beta");
    CHECK(a.bits() == b.bits());
    CHECK(a.bits() == b.bits());
    CHECK(a.bits() != c.bits());
    auto u = RngStream::derive(9, "unit");
    for (int i = 0; i < 10000; ++i) {
        double x = u.unit();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}
