#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "gyrolab/suitable.hpp"

namespace gyrolab {

namespace {

using Cx = std::complex<double>;

// Left-cancellation offset norm on the disk: ||(-a) (+) b||.
double rho(Cx a, Cx b) { return std::abs((b - a) / (1.0 - std::conj(a) * b)); }

/// Euclidean nearest-neighbor index over a fixed value list, bucketed on a
/// uniform grid. Ties break toward the smaller (earlier, canonical) index.
class PoolGrid {
public:
    PoolGrid(const std::vector<Cx>& values, std::size_t count, double cell)
        : values_(values), count_(count), cell_(cell) {
        buckets_.reserve(count * 2 + 1);
        for (std::size_t i = 0; i < count; ++i)
            buckets_[key_of(values_[i])].push_back(static_cast<std::int32_t>(i));
    }

    std::int32_t nearest(Cx target) const {
        const std::int64_t cx = static_cast<std::int64_t>(std::floor(target.real() / cell_));
        const std::int64_t cy = static_cast<std::int64_t>(std::floor(target.imag() / cell_));
        std::int32_t best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::int64_t dx = -3; dx <= 3; ++dx)
            for (std::int64_t dy = -3; dy <= 3; ++dy) {
                auto it = buckets_.find(CellKey{cx + dx, cy + dy, 0});
                if (it == buckets_.end()) continue;
                for (std::int32_t i : it->second) {
                    double d = std::abs(values_[static_cast<std::size_t>(i)] - target);
                    if (d < best_d || (d == best_d && i < best)) {
                        best_d = d;
                        best = i;
                    }
                }
            }
        return best;
    }

private:
    CellKey key_of(Cx v) const {
        return {static_cast<std::int64_t>(std::floor(v.real() / cell_)),
                static_cast<std::int64_t>(std::floor(v.imag() / cell_)), 0};
    }

    const std::vector<Cx>& values_;
    std::size_t count_;
    double cell_;
    std::unordered_map<CellKey, std::vector<std::int32_t>, CellKeyHash> buckets_;
};

WordSpec flip_signs(WordSpec w) {
    for (auto& s : w.signs) s = static_cast<std::int8_t>(-s);
    return w;
}

/// Small elements of the generator closure, found as difference words: the
/// value of flip(w2) (+) w1 is (-v2) (+) v1, which approximates a target q
/// to the pool's nearest-neighbor resolution when v1 is chosen nearest to
/// v2 (+) q. Negation distributes over the disk addition exactly, so the
/// flipped word is an honest closure word and the mined element honestly
/// belongs to the generated subgyrogroup.
class Miner {
public:
    Miner(const MobiusDisk& g, const ClosureSet<MobiusDisk>& P, int pool_len_cap,
          double grid_cell)
        : g_(g), P_(P), pool_count_(pool_prefix(P, pool_len_cap)),
          grid_(P.elements, pool_count_, grid_cell) {
        for (std::size_t i = 0; i < pool_count_ && anchors_.size() < 12; ++i)
            if (std::abs(P.elements[i]) <= 0.45)
                anchors_.push_back(static_cast<std::int32_t>(i));
    }

    struct Mined {
        Cx value{};
        std::int32_t anchor = -1; // v2 index into the closure
        std::int32_t near = -1;   // v1 index into the closure
        double err = std::numeric_limits<double>::infinity();
    };

    Mined mine(Cx target, double need) const {
        Mined best;
        for (std::int32_t a : anchors_) {
            const Cx v2 = P_.elements[static_cast<std::size_t>(a)];
            const std::int32_t i = grid_.nearest(g_.add(v2, target));
            if (i < 0) continue;
            const Cx u = g_.add(-v2, P_.elements[static_cast<std::size_t>(i)]);
            const double e = rho(u, target);
            if (e < best.err) best = {u, a, i, e};
            if (best.err <= 0.5 * need) break;
        }
        return best;
    }

    std::string provenance(const Mined& m) const {
        WordSpec left = flip_signs(P_.word_of(static_cast<std::size_t>(m.anchor)));
        WordSpec right = P_.word_of(static_cast<std::size_t>(m.near));
        WordSpec w;
        w.signs = left.signs;
        w.signs.insert(w.signs.end(), right.signs.begin(), right.signs.end());
        w.leaves = left.leaves;
        w.leaves.insert(w.leaves.end(), right.leaves.begin(), right.leaves.end());
        w.tree = join_trees(left.tree, right.tree);
        return word_to_string(w);
    }

private:
    static std::size_t pool_prefix(const ClosureSet<MobiusDisk>& P, int len_cap) {
        std::size_t n = 0;
        while (n < P.word_indexed_count && P.word_len[n] <= len_cap) ++n;
        return n;
    }

    const MobiusDisk& g_;
    const ClosureSet<MobiusDisk>& P_;
    std::size_t pool_count_;
    PoolGrid grid_;
    std::vector<std::int32_t> anchors_;
};

struct LedgerEntry {
    Cx value;
    int step = 0;
    std::string kind; // "cover", "pool", "mined", "offset"
    std::string word; // provenance over the construction generators
};

/// Word string for a left-comb chain of L-indices: ((i0 (+) i1) (+) i2)...
std::string chain_word(const std::vector<std::int32_t>& chain) {
    WordSpec w;
    w.signs = {1};
    w.leaves = {static_cast<std::size_t>(chain.at(0))};
    w.tree = enumerate_trees(1).front();
    for (std::size_t i = 1; i < chain.size(); ++i) {
        WordSpec leaf;
        leaf.signs = {1};
        leaf.leaves = {static_cast<std::size_t>(chain[i])};
        leaf.tree = enumerate_trees(1).front();
        WordSpec j;
        j.signs = w.signs;
        j.signs.insert(j.signs.end(), leaf.signs.begin(), leaf.signs.end());
        j.leaves = w.leaves;
        j.leaves.insert(j.leaves.end(), leaf.leaves.begin(), leaf.leaves.end());
        j.tree = join_trees(w.tree, leaf.tree);
        w = std::move(j);
    }
    return word_to_string(w);
}

SuitableSetResult<Cx> run_disk_construction(const MobiusDisk& g, const std::vector<Cx>& gens,
                                            const ConstructionConfig& cfg,
                                            const char* variant) {
    cfg.validate();
    if (gens.empty())
        throw precondition_error("disk construction: generator list is empty");
    const std::size_t steps = cfg.radius_schedule.size();
    if (static_cast<int>(steps) + 1 > cfg.word_cap)
        throw precondition_error(
            "disk construction: word cap " + std::to_string(cfg.word_cap) +
            " cannot hold witnesses for a schedule of length " + std::to_string(steps));

    SuitableSetResult<Cx> res;
    auto cloud = random_cloud(g, cfg.cloud_size, cfg.seed, "construction_cloud");

    ClosureOptions copt;
    copt.max_word_len = cfg.word_cap;
    copt.dedup_tol = cfg.dedup_tol;
    copt.max_elements = cfg.closure_budget;
    const auto P = closure_generate(g, gens, copt);
    if (P.size() < steps)
        throw precondition_error("disk construction: generator closure too small");

    auto p_density = density_check(g, P.elements, cloud, cfg.density_delta);
    if (p_density.fraction < cfg.density_min)
        throw precondition_error(
            "disk construction: generator closure has density fraction " +
            format_double(p_density.fraction) + " < " + format_double(cfg.density_min) +
            " at delta " + format_double(cfg.density_delta));

    // Covering evidence per schedule radius, centers drawn from the cloud.
    nlohmann::json precompact = nlohmann::json::array();
    for (double r : cfg.radius_schedule) {
        auto wit = precompact_witness(g, ball_at_zero(g, r), cloud);
        precompact.push_back({{"radius", r},
                              {"center_count", wit.centers.size()},
                              {"covered_fraction", wit.covered_fraction}});
    }
    res.trace.push_back({{"variant", variant},
                         {"generators", points_json(g, gens)},
                         {"closure_size", P.size()},
                         {"closure_truncated", P.truncated},
                         {"generator_density_fraction", p_density.fraction},
                         {"covering_witnesses", precompact}});

    // Targets: the cloud plus the first schedule-many enumerated closure
    // elements, which acquire explicit word witnesses step by step.
    std::vector<Cx> targets = cloud.points;
    for (std::size_t k = 0; k < steps; ++k) targets.push_back(P.elements[k]);
    const std::size_t nt = targets.size();

    Miner miner(g, P, cfg.word_cap - 1, 4.0 * cfg.dedup_tol);

    std::vector<LedgerEntry> L;
    std::vector<Cx> w(nt);                        // witness value per target
    std::vector<std::vector<std::int32_t>> chain(nt); // L-indices per target

    auto find_in_L = [&](Cx v) -> std::int32_t {
        for (std::size_t i = 0; i < L.size(); ++i)
            if (L[i].value == v) return static_cast<std::int32_t>(i);
        return -1;
    };
    auto append_L = [&](Cx v, int step, std::string kind, std::string word) {
        std::int32_t idx = find_in_L(v);
        if (idx >= 0) return idx;
        L.push_back({v, step, std::move(kind), std::move(word)});
        return static_cast<std::int32_t>(L.size() - 1);
    };

    // ---- step 0: cover everything at the coarsest radius with closure words
    {
        const double r0 = cfg.radius_schedule[0];
        std::vector<std::int32_t> K0;
        for (std::size_t i = 0; i < nt; ++i) {
            std::int32_t hit = -1;
            for (std::int32_t li : K0)
                if (rho(L[static_cast<std::size_t>(li)].value, targets[i]) <= r0) {
                    hit = li;
                    break;
                }
            if (hit < 0) {
                for (std::size_t pi = 0; pi < P.size(); ++pi) {
                    if (rho(P.elements[pi], targets[i]) <= r0) {
                        hit = append_L(P.elements[pi], 0, "cover",
                                       word_to_string(P.word_of(pi)));
                        K0.push_back(hit);
                        break;
                    }
                }
            }
            if (hit < 0)
                throw construction_error(
                    "disk construction: step 0: no closure word within radius " +
                    format_double(r0) + " of " + g.format(targets[i]));
            w[i] = L[static_cast<std::size_t>(hit)].value;
            chain[i] = {hit};
        }

        // enumerate x_0 and its offset u_0 = (-a_0) (+) x_0
        const std::size_t x0 = cloud.points.size();
        const Cx u0 = g.add(-w[x0], targets[x0]);
        nlohmann::json xrow;
        if (std::abs(u0) > 1e-15) {
            std::int32_t ui = append_L(u0, 0, "offset",
                                       "(-" + g.format(w[x0]) + ") ⊕ x_0");
            xrow = {{"x", element_json(g, targets[x0])},
                    {"witness", chain_word(chain[x0]) + " ⊕ +" + std::to_string(ui)},
                    {"offset_norm", std::abs(u0)}};
        } else {
            xrow = {{"x", element_json(g, targets[x0])},
                    {"witness", chain_word(chain[x0])},
                    {"offset_norm", 0.0}};
        }

        double max_res = 0.0;
        std::size_t covered = 0;
        for (std::size_t i = 0; i < cloud.points.size(); ++i) {
            double a = std::abs(g.add(-w[i], targets[i]));
            max_res = std::max(max_res, a);
            covered += a <= r0 + 1e-12 ? 1 : 0;
        }
        res.trace.push_back(
            {{"k", 0},
             {"radius", r0},
             {"added_cover_centers", K0.size()},
             {"added_mined", 0},
             {"L_size", L.size()},
             {"cover_fraction",
              static_cast<double>(covered) / static_cast<double>(cloud.points.size())},
             {"max_residual", max_res},
             {"enumerated", xrow}});
    }

    // ---- steps k >= 1: refine every witness into the next radius
    for (std::size_t k = 1; k < steps; ++k) {
        const double r = cfg.radius_schedule[k];
        const double rprev = cfg.radius_schedule[k - 1];
        const std::size_t L_before = L.size();

        // candidate closure values inside the previous neighborhood
        std::vector<std::size_t> pool;
        for (std::size_t pi = 0; pi < P.size(); ++pi)
            if (std::abs(P.elements[pi]) <= rprev) pool.push_back(pi);

        std::vector<std::int32_t> K;
        std::size_t mined_count = 0;
        nlohmann::json mined_rows = nlohmann::json::array();
        for (std::size_t i = 0; i < nt; ++i) {
            const Cx q = g.add(-w[i], targets[i]);
            if (std::abs(q) <= r) continue; // already inside the next ball
            std::int32_t hit = -1;
            for (std::int32_t li : K)
                if (rho(L[static_cast<std::size_t>(li)].value, q) <= r) {
                    hit = li;
                    break;
                }
            if (hit < 0) {
                for (std::size_t pi : pool) {
                    if (rho(P.elements[pi], q) <= r) {
                        hit = append_L(P.elements[pi], static_cast<int>(k), "pool",
                                       word_to_string(P.word_of(pi)));
                        K.push_back(hit);
                        break;
                    }
                }
            }
            if (hit < 0) {
                auto m = miner.mine(q, r);
                if (m.near >= 0 && m.err <= r && std::abs(m.value) <= rprev) {
                    hit = append_L(m.value, static_cast<int>(k), "mined",
                                   miner.provenance(m));
                    K.push_back(hit);
                    ++mined_count;
                    mined_rows.push_back({{"value", element_json(g, m.value)},
                                          {"error", m.err},
                                          {"word", L[static_cast<std::size_t>(hit)].word}});
                } else {
                    throw construction_error(
                        "disk construction: step " + std::to_string(k) +
                        ": no element of the generated set within radius " +
                        format_double(r) + " of residual " + g.format(q) +
                        " (pool " + std::to_string(pool.size()) + ", mining error " +
                        format_double(m.err) + ")");
                }
            }
            w[i] = g.add(w[i], L[static_cast<std::size_t>(hit)].value);
            chain[i].push_back(hit);
        }

        // enumerate x_k and its offset
        const std::size_t xk = cloud.points.size() + k;
        const Cx uk = g.add(-w[xk], targets[xk]);
        nlohmann::json xrow;
        if (std::abs(uk) > 1e-15) {
            std::int32_t ui = append_L(uk, static_cast<int>(k), "offset",
                                       "(-" + g.format(w[xk]) + ") ⊕ x_" +
                                           std::to_string(k));
            xrow = {{"x", element_json(g, targets[xk])},
                    {"witness", chain_word(chain[xk]) + " ⊕ +" + std::to_string(ui)},
                    {"offset_norm", std::abs(uk)}};
        } else {
            xrow = {{"x", element_json(g, targets[xk])},
                    {"witness", chain_word(chain[xk])},
                    {"offset_norm", 0.0}};
        }

        // per-step contracts: new points inside the previous neighborhood,
        // whole cloud inside the new translated balls
        double max_new_norm = 0.0;
        for (std::size_t li = L_before; li < L.size(); ++li)
            max_new_norm = std::max(max_new_norm, std::abs(L[li].value));
        if (max_new_norm > rprev + 1e-12)
            throw construction_error("disk construction: step " + std::to_string(k) +
                                     ": an added point escapes the previous neighborhood");

        double max_res = 0.0;
        std::size_t covered = 0;
        for (std::size_t i = 0; i < cloud.points.size(); ++i) {
            double a = std::abs(g.add(-w[i], targets[i]));
            max_res = std::max(max_res, a);
            covered += a <= r + 1e-12 ? 1 : 0;
        }
        const double frac =
            static_cast<double>(covered) / static_cast<double>(cloud.points.size());
        res.trace.push_back({{"k", k},
                             {"radius", r},
                             {"added_pool", K.size() - mined_count},
                             {"added_mined", mined_count},
                             {"mined", mined_rows},
                             {"max_added_norm", max_new_norm},
                             {"L_size", L.size()},
                             {"cover_fraction", frac},
                             {"max_residual", max_res},
                             {"enumerated", xrow}});
        if (frac < 1.0)
            throw construction_error("disk construction: step " + std::to_string(k) +
                                     ": cover fraction " + format_double(frac) + " < 1");
    }

    for (const auto& e : L) {
        if (std::abs(e.value) <= 1e-15) {
            res.excluded_identity = true;
            continue;
        }
        res.points.push_back(e.value);
    }

    auto sep = closed_discrete_check(g, res.points, cfg.boundary_margin);
    res.separation_report = closed_discrete_json(sep);

    ClosureOptions dopt = copt;
    auto lcl = closure_generate(g, res.points, dopt);
    auto dens = density_check(g, lcl.elements, cloud, cfg.density_delta);
    res.density_report = density_json(dens);
    res.density_report["closure_truncated"] = lcl.truncated;
    res.density_report["closure_size"] = lcl.size();
    return res;
}

} // namespace

SuitableSetResult<Cx> suitable_precompact_disk(const MobiusDisk& g,
                                               const std::vector<Cx>& generators,
                                               const ConstructionConfig& cfg) {
    return run_disk_construction(g, generators, cfg, "precompact");
}

SuitableSetResult<Cx> suitable_compact_metrizable(const MobiusDisk& g,
                                                  const std::vector<Cx>& generators,
                                                  const ConstructionConfig& cfg) {
    if (cfg.radius_schedule.empty() ||
        cfg.radius_schedule.back() > 4.0 * cfg.dedup_tol)
        throw precondition_error(
            "suitable_compact_metrizable: schedule must contract to the resolution "
            "scale (last radius <= 4 * dedup_tol)");
    return run_disk_construction(g, generators, cfg, "compact_metrizable");
}

} // namespace gyrolab
