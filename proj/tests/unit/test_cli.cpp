// End-to-end checks of the command-line driver: exit codes, artifact shape,
// and byte-identical reruns. Each case launches the built binary.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gyrolab/io.hpp"

using namespace gyrolab;
namespace fs = std::filesystem;

#ifndef GYRO_CLI_PATH
#define GYRO_CLI_PATH "gyro"
#endif
#ifndef GYROLAB_FIXTURE_DIR
#define GYROLAB_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(GYRO_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

std::string scratch_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / "gyrolab_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir.string();
}

std::string fixture(const std::string& name) {
    return std::string(GYROLAB_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("axioms command exit codes") {
    auto out = scratch_dir("ax_mobius");
    CHECK(run_cli("axioms --instance mobius --samples 2000 --tol 1e-9 --seed 42 --out " +
                  out) == 0);
    auto j = nlohmann::json::parse(read_text_file(out + "/axioms.json"));
    CHECK(j.at("pass") == true);
    auto man = nlohmann::json::parse(read_text_file(out + "/manifest.json"));
    CHECK(man.at("exit_code") == 0);
    CHECK(man.at("command") == "axioms");

    // group table: all residuals exactly zero
    auto out2 = scratch_dir("ax_group");
    CHECK(run_cli("axioms --instance group:" + fixture("z4.json") +
                  " --samples 500 --out " + out2) == 0);
    auto j2 = nlohmann::json::parse(read_text_file(out2 + "/axioms.json"));
    for (const auto& e : j2.at("entries")) CHECK(e.at("residual").get<double>() == 0.0);

    // malformed table file -> input format error
    CHECK(run_cli("axioms --instance table:" + fixture("bad_table.json")) == 3);
    // unknown instance / missing required flags -> usage error
    CHECK(run_cli("axioms --instance marble") == 2);
    CHECK(run_cli("axioms") == 2);
    CHECK(run_cli("nonsense") == 2);
}

TEST_CASE("words command lists and evaluates") {
    auto out = scratch_dir("words_list");
    CHECK(run_cli("words --n 4 --list --out " + out) == 0);
    auto j = nlohmann::json::parse(read_text_file(out + "/words.json"));
    CHECK(j.at("count") == 5);
    CHECK(j.at("trees").size() == 5);

    auto out2 = scratch_dir("words_eval");
    CHECK(run_cli("words --instance mobius --eval \"((+0 ⊕ +1) ⊕ +2)\" "
                  "--leaves 0.5,0.5i,-0.5 --out " +
                  out2) == 0);
    auto j2 = nlohmann::json::parse(read_text_file(out2 + "/words.json"));
    CHECK(j2.at("r_set_size") == 2);
    CHECK(j2.at("max_gap").get<double>() > 0.01);

    CHECK(run_cli("words --n 1 --list --out " + scratch_dir("words_one")) == 0);
    CHECK(run_cli("words --eval \"((+0 +1)\" --instance mobius --leaves 0.5,0.5i") == 3);
    CHECK(run_cli("words") == 2);
}

TEST_CASE("suitable command on tables and mismatch advice") {
    auto out = scratch_dir("suit_finite");
    CHECK(run_cli("suitable --instance table:" + fixture("z4.json") +
                  " --method finite --out " + out) == 0);
    auto j = nlohmann::json::parse(read_text_file(out + "/suitable.json"));
    CHECK(j.at("points") == nlohmann::json::array({1}));
    CHECK(j.at("verification").at("pass") == true);
    CHECK(fs::exists(out + "/points.csv"));

    CHECK(run_cli("suitable --instance mobius --method finite") == 2);
    CHECK(run_cli("suitable --instance table:" + fixture("z4.json") +
                  " --method precompact") == 2);
    CHECK(run_cli("suitable --instance table:" + fixture("z4.json") +
                  " --method extend --subgroup 0,2 --subgroup-gens 2 --out " +
                  scratch_dir("suit_extend")) == 0);
}

TEST_CASE("cover command and determinism") {
    auto out = scratch_dir("cover_z4");
    CHECK(run_cli("cover --instance group:" + fixture("z4.json") +
                  " --radius 0 --out " + out) == 0);
    auto j = nlohmann::json::parse(read_text_file(out + "/cover.json"));
    CHECK(j.at("center_count") == 4); // the point ball covers one element each

    auto big = scratch_dir("cover_disk_big");
    CHECK(run_cli("cover --instance mobius --radius 2.0 --cloud 500 --out " + big) == 0);
    auto jb = nlohmann::json::parse(read_text_file(big + "/cover.json"));
    CHECK(jb.at("center_count") == 1);

    auto d1 = scratch_dir("cover_det1");
    auto d2 = scratch_dir("cover_det2");
    CHECK(run_cli("cover --instance mobius --radius 0.5 --cloud 800 --seed 11 --out " + d1) == 0);
    CHECK(run_cli("cover --instance mobius --radius 0.5 --cloud 800 --seed 11 --out " + d2) == 0);
    CHECK(read_text_file(d1 + "/cover.json") == read_text_file(d2 + "/cover.json"));
    CHECK(read_text_file(d1 + "/manifest.json") == read_text_file(d2 + "/manifest.json"));
}
