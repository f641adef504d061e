// Command-line front door: axiom suites, word enumeration, covering
// witnesses, and suitable-set constructions over the built-in carriers.
//
// Exit codes: 0 all requested verdicts pass, 1 verdict failure, 2 usage
// error, 3 input format error.

#include <complex>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gyrolab/axioms.hpp"
#include "gyrolab/closure.hpp"
#include "gyrolab/einstein.hpp"
#include "gyrolab/integers.hpp"
#include "gyrolab/io.hpp"
#include "gyrolab/metric.hpp"
#include "gyrolab/mobius.hpp"
#include "gyrolab/report.hpp"
#include "gyrolab/serialize.hpp"
#include "gyrolab/suitable.hpp"
#include "gyrolab/table.hpp"
#include "gyrolab/words.hpp"

namespace fs = std::filesystem;
using namespace gyrolab;
using Cx = std::complex<double>;

namespace {

struct usage_error : error {
    using error::error;
};

struct InstanceSpec {
    enum class Kind { mobius, einstein, table, group, integers } kind;
    double c = 1.0;
    std::string path;
    std::string text; // original spec string
};

InstanceSpec parse_instance(const std::string& s) {
    InstanceSpec spec;
    spec.text = s;
    if (s == "mobius") {
        spec.kind = InstanceSpec::Kind::mobius;
    } else if (s == "einstein" || s.rfind("einstein:", 0) == 0) {
        spec.kind = InstanceSpec::Kind::einstein;
        if (s.size() > 9) {
            if (s.rfind("einstein:c=", 0) != 0)
                throw usage_error("unknown instance '" + s + "' (want einstein:c=<real>)");
            try {
                spec.c = std::stod(s.substr(11));
            } catch (...) {
                throw usage_error("bad speed parameter in '" + s + "'");
            }
            if (!(spec.c > 0.0)) throw usage_error("speed parameter must be positive");
        }
    } else if (s.rfind("table:", 0) == 0) {
        spec.kind = InstanceSpec::Kind::table;
        spec.path = s.substr(6);
    } else if (s.rfind("group:", 0) == 0) {
        spec.kind = InstanceSpec::Kind::group;
        spec.path = s.substr(6);
    } else if (s == "integers") {
        spec.kind = InstanceSpec::Kind::integers;
    } else {
        throw usage_error("unknown instance '" + s +
                          "' (want mobius | einstein:c=<real> | table:<path> | "
                          "group:<path> | integers)");
    }
    return spec;
}

struct Manifest {
    std::string command;
    std::string instance;
    nlohmann::json config = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::vector<std::string> artifacts;
    int exit_code = 0;

    nlohmann::json to_json() const {
        return {{"command", command}, {"instance", instance},     {"config", config},
                {"seed", seed},       {"artifacts", artifacts}, {"exit_code", exit_code}};
    }
};

std::string out_path(const std::string& dir, const std::string& name) {
    fs::create_directories(dir);
    return (fs::path(dir) / name).string();
}

void finish(Manifest& m, const std::string& dir) {
    write_text_file(out_path(dir, "manifest.json"), m.to_json().dump(2) + "\n");
}

std::vector<Cx> parse_complex_list(const std::string& s) {
    std::vector<Cx> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma - start);
        if (!tok.empty()) out.push_back(parse_complex(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma - start);
        if (!tok.empty()) out.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma - start);
        if (!tok.empty()) out.push_back(std::stod(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------

struct AxiomArgs {
    std::string instance;
    std::size_t samples = 100000;
    std::size_t probes = 8;
    double tol = 1e-9;
    std::uint64_t seed = 42;
    std::string out = ".";
};

int run_axioms(const AxiomArgs& a) {
    auto spec = parse_instance(a.instance);
    Manifest m;
    m.command = "axioms";
    m.instance = a.instance;
    m.seed = a.seed;
    m.config = {{"samples", a.samples}, {"probes", a.probes}, {"tol", a.tol}};

    AxiomSuiteParams p;
    p.samples = a.samples;
    p.probes = a.probes;
    p.tol = a.tol;
    p.seed = a.seed;

    AxiomReport rep;
    switch (spec.kind) {
    case InstanceSpec::Kind::mobius:
        rep = run_axiom_suite(MobiusDisk{}, p);
        break;
    case InstanceSpec::Kind::einstein: {
        EinsteinBall e(spec.c);
        p.ball_radii = {0.25 * spec.c, 0.5 * spec.c, 0.99 * spec.c};
        rep = run_axiom_suite(e, p);
        break;
    }
    case InstanceSpec::Kind::integers: {
        p.ball_radii = {5.0, 50.0};
        rep = run_axiom_suite(IntegerGyro{}, p);
        break;
    }
    case InstanceSpec::Kind::table:
    case InstanceSpec::Kind::group: {
        auto t = TableGyro::load(spec.path);
        rep = t.validate();
        if (rep.pass()) rep.append(run_axiom_suite(t, p));
        break;
    }
    }

    write_text_file(out_path(a.out, "axioms.json"), report_to_json_text(rep) + "\n");
    m.artifacts = {"axioms.json"};
    m.exit_code = rep.pass() ? 0 : 1;
    finish(m, a.out);
    std::cout << (rep.pass() ? "PASS" : "FAIL") << " axioms on " << rep.carrier
              << ": max residual " << format_double(rep.max_residual()) << "\n";
    return m.exit_code;
}

// ---------------------------------------------------------------------------

struct WordsArgs {
    std::string instance;
    int n = 3;
    bool list = false;
    std::string eval;
    std::string leaves;
    double dedup_tol = 1e-12;
    std::string out = ".";
};

int run_words(const WordsArgs& a) {
    Manifest m;
    m.command = "words";
    m.instance = a.instance.empty() ? "none" : a.instance;
    m.config = {{"n", a.n}, {"list", a.list}, {"eval", a.eval}, {"leaves", a.leaves}};
    nlohmann::json doc;

    if (a.list) {
        if (a.n < 1) throw usage_error("--n must be >= 1");
        auto trees = enumerate_trees(a.n);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : trees) {
            WordSpec w;
            w.signs.assign(static_cast<std::size_t>(a.n), 1);
            w.leaves.resize(static_cast<std::size_t>(a.n));
            for (std::size_t i = 0; i < w.leaves.size(); ++i) w.leaves[i] = i;
            w.tree = t;
            std::string str = word_to_string(w);
            arr.push_back({{"m", t.index}, {"word", str}});
            std::cout << "m=" << t.index << "  " << str << "\n";
        }
        std::cout << trees.size() << " bracketings of " << a.n << " leaves\n";
        doc["n"] = a.n;
        doc["count"] = trees.size();
        doc["trees"] = arr;
    }

    if (!a.eval.empty()) {
        if (a.instance != "mobius")
            throw usage_error("--eval currently expects --instance mobius");
        MobiusDisk d;
        auto leaves = parse_complex_list(a.leaves);
        if (leaves.empty()) throw usage_error("--eval needs --leaves v0,v1,...");
        WordSpec w = word_from_string(a.eval);
        Cx value = eval_word(d, w, leaves);

        // all bracketings over the same signed leaves
        std::vector<Cx> assign;
        for (std::size_t i = 0; i < w.leaves.size(); ++i) {
            if (w.leaves[i] >= leaves.size())
                throw usage_error("word references leaf " + std::to_string(w.leaves[i]) +
                                  " but only " + std::to_string(leaves.size()) +
                                  " leaves were given");
            assign.push_back(leaves[w.leaves[i]]);
        }
        auto values = r_set(d, w.signs, assign, a.dedup_tol);
        double gap = 0.0;
        for (const auto& u : values)
            for (const auto& v : values) gap = std::max(gap, std::abs(u - v));

        doc["word"] = word_to_string(w);
        doc["value"] = element_json(d, value);
        doc["r_set_size"] = values.size();
        doc["r_set"] = points_json(d, values);
        doc["max_gap"] = gap;
        std::cout << "value = " << d.format(value) << "\n";
        std::cout << "bracketing values: " << values.size() << ", max gap "
                  << format_double(gap) << "\n";
    }

    if (!a.list && a.eval.empty())
        throw usage_error("words: nothing to do (pass --list and/or --eval)");

    write_text_file(out_path(a.out, "words.json"), doc.dump(2) + "\n");
    m.artifacts = {"words.json"};
    m.exit_code = 0;
    finish(m, a.out);
    return 0;
}

// ---------------------------------------------------------------------------

struct SuitableArgs {
    std::string instance;
    std::string method;
    std::string generators = "0.5,0.5i";
    std::string subgroup;
    std::string subgroup_gens;
    std::string enumeration;
    std::string schedule;
    double eps = 0.05;
    int word_cap = 8;
    std::size_t cloud = 1000;
    double dedup_tol = 1e-3;
    std::size_t budget = 2000000;
    double density_min = 0.95;
    std::uint64_t seed = 7;
    std::string out = ".";
};

ConstructionConfig config_from(const SuitableArgs& a) {
    ConstructionConfig cfg;
    if (!a.schedule.empty()) cfg.radius_schedule = parse_double_list(a.schedule);
    cfg.word_cap = a.word_cap;
    cfg.cloud_size = a.cloud;
    cfg.dedup_tol = a.dedup_tol;
    cfg.seed = a.seed;
    cfg.density_delta = a.eps;
    cfg.density_min = a.density_min;
    cfg.closure_budget = a.budget;
    return cfg;
}

template <GyroCarrier G>
int emit_suitable(const G& g, const SuitableSetResult<typename G::element_type>& res,
                  const ConstructionConfig& cfg, Manifest& m, const SuitableArgs& a) {
    auto verification = verify_suitable(g, res.points, cfg);
    nlohmann::json doc = suitable_result_json(g, res);
    doc["verification"] = verification;
    write_text_file(out_path(a.out, "suitable.json"), doc.dump(2) + "\n");
    write_text_file(out_path(a.out, "points.csv"), points_csv(res.points));
    m.artifacts = {"suitable.json", "points.csv"};
    const bool pass = verification.at("pass").get<bool>();
    m.exit_code = pass ? 0 : 1;
    finish(m, a.out);
    std::cout << (pass ? "PASS" : "FAIL") << " suitable set: " << res.points.size()
              << " points\n";
    return m.exit_code;
}

int run_suitable(const SuitableArgs& a) {
    auto spec = parse_instance(a.instance);
    Manifest m;
    m.command = "suitable";
    m.instance = a.instance;
    m.seed = a.seed;
    m.config = {{"method", a.method},     {"generators", a.generators},
                {"eps", a.eps},           {"word_cap", a.word_cap},
                {"cloud", a.cloud},       {"dedup_tol", a.dedup_tol},
                {"budget", a.budget},     {"density_min", a.density_min},
                {"schedule", a.schedule}, {"subgroup", a.subgroup},
                {"subgroup_gens", a.subgroup_gens}};

    const bool is_table =
        spec.kind == InstanceSpec::Kind::table || spec.kind == InstanceSpec::Kind::group;

    if (a.method == "finite" || a.method == "countable-trace" || a.method == "extend") {
        if (!is_table)
            throw usage_error("method '" + a.method +
                              "' needs a finite table instance (table:<path> or "
                              "group:<path>); for the disk use --method precompact");
        auto t = TableGyro::load(spec.path);
        auto cfg = config_from(a);
        if (a.method == "finite") return emit_suitable(t, suitable_finite(t), cfg, m, a);
        if (a.method == "countable-trace") {
            std::vector<int> order;
            if (a.enumeration.empty())
                for (int i = 0; i < t.order(); ++i) order.push_back(i);
            else
                order = parse_int_list(a.enumeration);
            return emit_suitable(t, suitable_countable_trace(t, order), cfg, m, a);
        }
        if (a.subgroup.empty())
            throw usage_error("method 'extend' needs --subgroup i,j,... ");
        auto H = parse_int_list(a.subgroup);
        auto S_H = parse_int_list(a.subgroup_gens);
        return emit_suitable(t, extend_via_open_subgyro(t, H, S_H), cfg, m, a);
    }

    if (a.method == "precompact" || a.method == "compact") {
        if (spec.kind == InstanceSpec::Kind::table || spec.kind == InstanceSpec::Kind::group) {
            if (a.method == "compact") {
                auto t = TableGyro::load(spec.path);
                return emit_suitable(t, suitable_compact_metrizable(t), config_from(a), m, a);
            }
            throw usage_error(
                "method 'precompact' runs on the disk; finite tables are already "
                "covered by --method finite");
        }
        if (spec.kind != InstanceSpec::Kind::mobius)
            throw usage_error("method '" + a.method + "' needs --instance mobius");
        MobiusDisk d;
        auto gens = parse_complex_list(a.generators);
        auto cfg = config_from(a);
        if (a.method == "compact") {
            if (a.schedule.empty()) {
                cfg.radius_schedule.clear();
                for (double r = 0.4; ; r *= 0.5) {
                    cfg.radius_schedule.push_back(r);
                    if (r <= 4.0 * cfg.dedup_tol) break;
                }
            }
            cfg.word_cap = std::max<int>(cfg.word_cap,
                                         static_cast<int>(cfg.radius_schedule.size()) + 1);
            m.config["word_cap_effective"] = cfg.word_cap;
            return emit_suitable(d, suitable_compact_metrizable(d, gens, cfg), cfg, m, a);
        }
        return emit_suitable(d, suitable_precompact_disk(d, gens, cfg), cfg, m, a);
    }

    throw usage_error("unknown method '" + a.method +
                      "' (want finite | countable-trace | precompact | extend | compact)");
}

// ---------------------------------------------------------------------------

struct CoverArgs {
    std::string instance;
    double radius = 0.5;
    std::size_t cloud = 10000;
    std::uint64_t seed = 42;
    std::string out = ".";
};

template <GyroCarrier G>
int run_cover_on(const G& g, const CoverArgs& a, Manifest& m) {
    SampleCloud<typename G::element_type> cloud;
    if constexpr (std::same_as<G, TableGyro>) {
        for (int i = 0; i < g.order(); ++i) cloud.points.push_back(i);
        cloud.description = "carrier";
    } else {
        cloud = random_cloud(g, a.cloud, a.seed);
    }
    auto wit = precompact_witness(g, ball_at_zero(g, a.radius), cloud);
    write_text_file(out_path(a.out, "cover.json"),
                    cover_witness_json(g, wit).dump(2) + "\n");
    m.artifacts = {"cover.json"};
    m.exit_code = wit.full() ? 0 : 1;
    finish(m, a.out);
    std::cout << (wit.full() ? "PASS" : "FAIL") << " cover: " << wit.centers.size()
              << " centers at radius " << format_double(a.radius) << ", fraction "
              << format_double(wit.covered_fraction) << "\n";
    return m.exit_code;
}

int run_cover(const CoverArgs& a) {
    if (a.radius < 0.0) throw usage_error("--radius must be >= 0");
    auto spec = parse_instance(a.instance);
    Manifest m;
    m.command = "cover";
    m.instance = a.instance;
    m.seed = a.seed;
    m.config = {{"radius", a.radius}, {"cloud", a.cloud}};
    switch (spec.kind) {
    case InstanceSpec::Kind::mobius:
        return run_cover_on(MobiusDisk{}, a, m);
    case InstanceSpec::Kind::einstein:
        return run_cover_on(EinsteinBall{spec.c}, a, m);
    case InstanceSpec::Kind::integers:
        return run_cover_on(IntegerGyro{}, a, m);
    case InstanceSpec::Kind::table:
    case InstanceSpec::Kind::group:
        return run_cover_on(TableGyro::load(spec.path), a, m);
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gyrogroup laboratory: axiom suites, bracketed words, covering "
                 "witnesses and suitable-set constructions"};
    app.require_subcommand(1);

    AxiomArgs ax;
    auto* axioms = app.add_subcommand("axioms", "run every axiom check on a carrier");
    axioms->add_option("--instance", ax.instance,
                       "mobius | einstein:c=<real> | table:<path> | group:<path> | integers")
        ->required();
    axioms->add_option("--samples", ax.samples, "samples per check");
    axioms->add_option("--probes", ax.probes, "pointwise probes per pair (left loop)");
    axioms->add_option("--tol", ax.tol, "pass tolerance");
    axioms->add_option("--seed", ax.seed, "master seed");
    axioms->add_option("--out", ax.out, "output directory");

    WordsArgs wd;
    auto* words = app.add_subcommand("words", "enumerate bracketings / evaluate words");
    words->add_option("--instance", wd.instance, "carrier for --eval (mobius)");
    words->add_option("--n", wd.n, "leaf count for --list");
    words->add_flag("--list", wd.list, "list all bracketings of n leaves");
    words->add_option("--eval", wd.eval, "word string, e.g. \"((+0 ⊕ +1) ⊕ -0)\"");
    words->add_option("--leaves", wd.leaves, "comma-separated leaf values, e.g. 0.5,0.5i");
    words->add_option("--out", wd.out, "output directory");

    SuitableArgs su;
    auto* suitable = app.add_subcommand("suitable", "run a suitable-set construction");
    suitable->add_option("--instance", su.instance, "carrier")->required();
    suitable
        ->add_option("--method", su.method,
                     "finite | countable-trace | precompact | extend | compact")
        ->required();
    suitable->add_option("--generators", su.generators, "disk generators (complex list)");
    suitable->add_option("--subgroup", su.subgroup, "subgyrogroup indices for extend");
    suitable->add_option("--subgroup-gens", su.subgroup_gens,
                         "generating set of the subgyrogroup");
    suitable->add_option("--enumeration", su.enumeration,
                         "carrier enumeration for countable-trace");
    suitable->add_option("--schedule", su.schedule, "radius schedule override");
    suitable->add_option("--eps", su.eps, "density delta");
    suitable->add_option("--word-cap", su.word_cap, "word length cap");
    suitable->add_option("--cloud", su.cloud, "sample cloud size");
    suitable->add_option("--dedup", su.dedup_tol, "closure dedup tolerance");
    suitable->add_option("--budget", su.budget, "closure element budget");
    suitable->add_option("--density-min", su.density_min, "density pass bar");
    suitable->add_option("--seed", su.seed, "master seed");
    suitable->add_option("--out", su.out, "output directory");

    CoverArgs cv;
    auto* cover = app.add_subcommand("cover", "greedy covering witness at one radius");
    cover->add_option("--instance", cv.instance, "carrier")->required();
    cover->add_option("--radius", cv.radius, "ball radius about 0");
    cover->add_option("--cloud", cv.cloud, "sample cloud size");
    cover->add_option("--seed", cv.seed, "master seed");
    cover->add_option("--out", cv.out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*axioms) return run_axioms(ax);
        if (*words) return run_words(wd);
        if (*suitable) return run_suitable(su);
        if (*cover) return run_cover(cv);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const format_error& e) {
        std::cerr << "input format error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
