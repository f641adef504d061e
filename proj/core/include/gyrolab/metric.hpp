#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gyrolab/carrier.hpp"
#include "gyrolab/closure.hpp"
#include "gyrolab/errors.hpp"

namespace gyrolab {

/// Norm ball about the identity standing in for a neighborhood of 0.
/// Radius 0 is allowed: on discrete carriers the closed radius-0 ball is the
/// singleton {0}. Membership of b in the translated ball a (+) U is always
/// decided through the left-cancellation offset (-a) (+) b.
template <typename E>
struct Ball {
    E center{};
    double radius = 0.0;
};

template <GyroCarrier G>
Ball<typename G::element_type> ball_at_zero(const G& g, double radius) {
    if (radius < 0.0) throw precondition_error("ball: radius must be >= 0");
    return {g.identity(), radius};
}

template <GyroCarrier G>
void require_centered(const G& g, const Ball<typename G::element_type>& b,
                      const char* op) {
    if (!g.eq(b.center, g.identity(), 1e-15))
        throw precondition_error(std::string(op) + ": neighborhood balls must be centered at 0");
}

/// Finite point cloud standing in for the carrier.
template <typename E>
struct SampleCloud {
    std::vector<E> points;
    std::string description;
};

template <GyroCarrier G>
SampleCloud<typename G::element_type> random_cloud(const G& g, std::size_t size,
                                                   std::uint64_t seed,
                                                   std::string_view label = "cloud") {
    SampleCloud<typename G::element_type> c;
    auto rng = RngStream::derive(seed, label);
    c.points.reserve(size);
    for (std::size_t i = 0; i < size; ++i) c.points.push_back(g.sample(rng));
    c.description = "random(" + std::to_string(seed) + ")";
    return c;
}

template <GyroCarrier G>
SampleCloud<typename G::element_type> left_translate(const G& g,
                                                     const typename G::element_type& x,
                                                     const SampleCloud<typename G::element_type>& P) {
    SampleCloud<typename G::element_type> out;
    out.points.reserve(P.points.size());
    for (const auto& p : P.points) out.points.push_back(g.add(x, p));
    out.description = P.description + " <- left_translate";
    return out;
}

struct UDisjointResult {
    bool disjoint = true;
    std::optional<std::pair<std::size_t, std::size_t>> violation; // (a index, b index)
    double offending_norm = 0.0;
};

/// A is U-disjoint when no member lies in another member's translated ball:
/// ||(-a) (+) b|| > r for all ordered pairs of distinct members.
template <GyroCarrier G>
UDisjointResult u_disjoint_check(const G& g, const std::vector<typename G::element_type>& A,
                                 const Ball<typename G::element_type>& U) {
    require_centered(g, U, "u_disjoint_check");
    UDisjointResult res;
    for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t j = 0; j < A.size(); ++j) {
            if (i == j) continue;
            double off = gyro_offset_norm(g, A[i], A[j]);
            if (off <= U.radius) {
                res.disjoint = false;
                res.violation = {i, j};
                res.offending_norm = off;
                return res;
            }
        }
    }
    return res;
}

namespace detail {

/// Deterministic sample of the ball U about 0 used for set-intersection
/// decisions. Finite tables have no ball sampler; there the "sample" is the
/// exact list of elements with norm <= radius.
template <GyroCarrier G>
std::vector<typename G::element_type> ball_probe_points(const G& g, double radius,
                                                        std::size_t count,
                                                        std::uint64_t seed) {
    std::vector<typename G::element_type> pts;
    if constexpr (BallSamplingCarrier<G>) {
        auto rng = RngStream::derive(seed, "ball_probe");
        pts.reserve(count + 1);
        pts.push_back(g.identity());
        for (std::size_t i = 0; i + 1 < count; ++i) pts.push_back(g.sample_ball(radius, rng));
    } else if constexpr (std::same_as<G, TableGyro>) {
        for (int a = 0; a < g.order(); ++a)
            if (g.norm(a) <= radius) pts.push_back(a);
    } else {
        static_assert(BallSamplingCarrier<G> || std::same_as<G, TableGyro>,
                      "carrier cannot enumerate or sample norm balls");
    }
    return pts;
}

} // namespace detail

struct DiscreteFamilyReport {
    int max_intersections = 0;
    std::size_t worst_probe = 0;
    std::size_t probes = 0;
    std::size_t ball_samples = 0;
};

/// For each probe x, counts family members a whose translated ball a (+) V
/// meets x (+) V, decided on sampled ball points: x (+) v lands in a (+) V
/// exactly when ||(-a) (+) (x (+) v)|| <= r. Sampling can only under-count
/// true intersections, never invent one.
template <GyroCarrier G>
DiscreteFamilyReport discrete_family_check(const G& g,
                                           const std::vector<typename G::element_type>& A,
                                           const Ball<typename G::element_type>& V,
                                           const SampleCloud<typename G::element_type>& probes,
                                           std::size_t ball_samples, std::uint64_t seed) {
    require_centered(g, V, "discrete_family_check");
    if (probes.points.empty())
        throw precondition_error("discrete_family_check: probe cloud is empty");
    auto vs = detail::ball_probe_points(g, V.radius, ball_samples, seed);
    DiscreteFamilyReport rep;
    rep.probes = probes.points.size();
    rep.ball_samples = vs.size();
    for (std::size_t pi = 0; pi < probes.points.size(); ++pi) {
        const auto& x = probes.points[pi];
        int count = 0;
        for (const auto& a : A) {
            bool meets = false;
            for (const auto& v : vs) {
                if (gyro_offset_norm(g, a, g.add(x, v)) <= V.radius) {
                    meets = true;
                    break;
                }
            }
            count += meets ? 1 : 0;
        }
        if (count > rep.max_intersections) {
            rep.max_intersections = count;
            rep.worst_probe = pi;
        }
    }
    return rep;
}

struct BallChainResult {
    bool pass = false;
    double worst_vv = 0.0; // max ||v1 (+) v2|| observed
    double worst_ww = 0.0; // max ||w1 (+) w2|| observed
    std::vector<std::string> witness_vv;
    std::vector<std::string> witness_ww;
};

/// Samples the chain V (+) V in W and W (+) W in U by norm; `tol` absorbs
/// floating slack on the closed-ball comparison.
template <BallSamplingCarrier G>
BallChainResult ball_arithmetic_check(const G& g, const Ball<typename G::element_type>& V,
                                      const Ball<typename G::element_type>& W,
                                      const Ball<typename G::element_type>& U, std::size_t n,
                                      double tol, std::uint64_t seed) {
    require_centered(g, V, "ball_arithmetic_check");
    require_centered(g, W, "ball_arithmetic_check");
    require_centered(g, U, "ball_arithmetic_check");
    if (!(V.radius > 0.0) || !(W.radius > 0.0) || !(U.radius > 0.0))
        throw precondition_error("ball_arithmetic_check: radii must be positive");
    auto rng = RngStream::derive(seed, "ball_chain");
    BallChainResult res;
    for (std::size_t i = 0; i < n; ++i) {
        auto v1 = g.sample_ball(V.radius, rng);
        auto v2 = g.sample_ball(V.radius, rng);
        double nv = g.norm(g.add(v1, v2));
        if (nv > res.worst_vv) {
            res.worst_vv = nv;
            res.witness_vv = {g.format(v1), g.format(v2)};
        }
        auto w1 = g.sample_ball(W.radius, rng);
        auto w2 = g.sample_ball(W.radius, rng);
        double nw = g.norm(g.add(w1, w2));
        if (nw > res.worst_ww) {
            res.worst_ww = nw;
            res.witness_ww = {g.format(w1), g.format(w2)};
        }
    }
    res.pass = res.worst_vv <= W.radius + tol && res.worst_ww <= U.radius + tol;
    return res;
}

/// Covering witness: G = F (+) U at cloud resolution, with the uncovered
/// remainder when the candidate pool cannot finish the job.
template <typename E>
struct CoverWitness {
    std::vector<E> centers; // F
    double radius = 0.0;
    double covered_fraction = 0.0;
    std::vector<E> uncovered_examples; // capped at 8
    std::size_t cloud_size = 0;

    bool full() const { return covered_fraction >= 1.0; }
};

/// Greedy first-fit cover of the cloud by translated balls: scan the cloud
/// in order; each uncovered point adopts the first candidate that covers it
/// (the point itself when candidates are drawn from the cloud). The result
/// is minimal-greedy, not globally minimal.
template <GyroCarrier G>
CoverWitness<typename G::element_type> precompact_witness(
    const G& g, const Ball<typename G::element_type>& U,
    const SampleCloud<typename G::element_type>& cloud,
    const std::vector<typename G::element_type>& candidates = {}) {
    require_centered(g, U, "precompact_witness");
    if (cloud.points.empty())
        throw precondition_error("precompact_witness: cloud is empty");
    const bool from_cloud = candidates.empty();
    CoverWitness<typename G::element_type> wit;
    wit.radius = U.radius;
    wit.cloud_size = cloud.points.size();
    std::size_t covered = 0;
    for (const auto& x : cloud.points) {
        bool ok = false;
        for (const auto& f : wit.centers) {
            if (gyro_offset_norm(g, f, x) <= U.radius) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            if (from_cloud) {
                wit.centers.push_back(x); // covers itself: offset norm is 0
                ok = true;
            } else {
                for (const auto& c : candidates) {
                    if (gyro_offset_norm(g, c, x) <= U.radius) {
                        wit.centers.push_back(c);
                        ok = true;
                        break;
                    }
                }
            }
        }
        if (ok)
            ++covered;
        else if (wit.uncovered_examples.size() < 8)
            wit.uncovered_examples.push_back(x);
    }
    wit.covered_fraction =
        static_cast<double>(covered) / static_cast<double>(cloud.points.size());
    return wit;
}

/// Greedy family of points each outside every previously picked translated
/// ball (both offset directions, so the family always passes
/// u_disjoint_check with the same U). Stops early when the cloud runs out —
/// itself covering evidence at this radius.
template <GyroCarrier G>
std::vector<typename G::element_type> greedy_separated_family(
    const G& g, const Ball<typename G::element_type>& U, std::size_t count,
    const SampleCloud<typename G::element_type>& cloud) {
    require_centered(g, U, "greedy_separated_family");
    if (count < 1) throw precondition_error("greedy_separated_family: count must be >= 1");
    std::vector<typename G::element_type> A;
    for (const auto& p : cloud.points) {
        if (A.size() >= count) break;
        bool separated = true;
        for (const auto& a : A) {
            if (gyro_offset_norm(g, a, p) <= U.radius ||
                gyro_offset_norm(g, p, a) <= U.radius) {
                separated = false;
                break;
            }
        }
        if (separated) A.push_back(p);
    }
    return A;
}

template <typename E>
struct MaximalDisjointResult {
    std::vector<E> family; // maximal V-disjoint over the cloud
    double radius_v = 0.0;
    double radius_w = 0.0; // sampled sup of V (+) V, with margin
    double radius_u = 0.0; // sampled sup of W (+) W, with margin
    bool chain_verified = false;
    CoverWitness<E> coverage; // cloud covered by family (+) U_u
};

/// Greedy maximal family with pairwise disjoint translated balls a (+) V
/// (decided on sampled ball points), then the covering conclusion: the
/// family translated by the derived U covers the whole cloud.
template <BallSamplingCarrier G>
MaximalDisjointResult<typename G::element_type> maximal_v_disjoint(
    const G& g, const Ball<typename G::element_type>& V,
    const SampleCloud<typename G::element_type>& cloud, std::size_t ball_samples,
    std::uint64_t seed) {
    require_centered(g, V, "maximal_v_disjoint");
    if (cloud.points.empty())
        throw precondition_error("maximal_v_disjoint: cloud is empty");
    auto vs = detail::ball_probe_points(g, V.radius, ball_samples, seed);

    MaximalDisjointResult<typename G::element_type> res;
    res.radius_v = V.radius;
    auto balls_meet = [&](const typename G::element_type& a,
                          const typename G::element_type& b) {
        for (const auto& v : vs) {
            if (gyro_offset_norm(g, b, g.add(a, v)) <= V.radius) return true;
            if (gyro_offset_norm(g, a, g.add(b, v)) <= V.radius) return true;
        }
        return false;
    };
    for (const auto& p : cloud.points) {
        bool disjoint = true;
        for (const auto& a : res.family) {
            if (balls_meet(a, p)) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) res.family.push_back(p);
    }

    // Derive the chain V (+) V in W, W (+) W in U from sampled suprema.
    auto rng = RngStream::derive(seed, "chain_radii");
    double sup_vv = 0.0;
    for (std::size_t i = 0; i < std::max<std::size_t>(ball_samples * 8, 256); ++i)
        sup_vv = std::max(sup_vv,
                          g.norm(g.add(g.sample_ball(V.radius, rng), g.sample_ball(V.radius, rng))));
    res.radius_w = sup_vv * (1.0 + 1e-9) + 1e-15;
    double sup_ww = 0.0;
    for (std::size_t i = 0; i < std::max<std::size_t>(ball_samples * 8, 256); ++i)
        sup_ww = std::max(sup_ww, g.norm(g.add(g.sample_ball(res.radius_w, rng),
                                               g.sample_ball(res.radius_w, rng))));
    res.radius_u = sup_ww * (1.0 + 1e-9) + 1e-15;
    auto chain = ball_arithmetic_check(g, ball_at_zero(g, V.radius),
                                       ball_at_zero(g, res.radius_w),
                                       ball_at_zero(g, res.radius_u),
                                       std::max<std::size_t>(ball_samples * 4, 128), 1e-12,
                                       seed ^ 0xc0ffee);
    res.chain_verified = chain.pass;
    res.coverage = precompact_witness(g, ball_at_zero(g, res.radius_u), cloud, res.family);
    return res;
}

struct DensityReport {
    double fraction = 0.0;
    double delta = 0.0;
    std::size_t cloud_size = 0;
    std::size_t set_size = 0;
    std::vector<std::size_t> uncovered; // cloud indices, capped at 8
    bool full() const { return fraction >= 1.0; }
};

/// Fraction of cloud points within ambient distance delta of the set S.
template <GyroCarrier G>
DensityReport density_check(const G& g, const std::vector<typename G::element_type>& S,
                            const SampleCloud<typename G::element_type>& cloud,
                            double delta) {
    if (!(delta > 0.0)) throw precondition_error("density_check: delta must be positive");
    DensityReport rep;
    rep.delta = delta;
    rep.cloud_size = cloud.points.size();
    rep.set_size = S.size();
    if (cloud.points.empty()) return rep;

    std::size_t hit = 0;
    if constexpr (std::same_as<G, MobiusDisk>) {
        // Cell grid at delta: any point within delta lies in a neighboring cell.
        std::unordered_map<CellKey, std::vector<std::size_t>, CellKeyHash> grid;
        grid.reserve(S.size() * 2 + 1);
        for (std::size_t i = 0; i < S.size(); ++i)
            grid[cell_key(g, S[i], delta)].push_back(i);
        for (std::size_t ci = 0; ci < cloud.points.size(); ++ci) {
            const auto& x = cloud.points[ci];
            auto base = cell_key(g, x, delta);
            bool found = false;
            for (std::int64_t dx = -1; dx <= 1 && !found; ++dx)
                for (std::int64_t dy = -1; dy <= 1 && !found; ++dy) {
                    auto it = grid.find(CellKey{base.q0 + dx, base.q1 + dy, 0});
                    if (it == grid.end()) continue;
                    for (std::size_t si : it->second)
                        if (g.dist(S[si], x) <= delta) {
                            found = true;
                            break;
                        }
                }
            if (found)
                ++hit;
            else if (rep.uncovered.size() < 8)
                rep.uncovered.push_back(ci);
        }
    } else {
        for (std::size_t ci = 0; ci < cloud.points.size(); ++ci) {
            bool found = false;
            for (const auto& s : S)
                if (g.dist(s, cloud.points[ci]) <= delta) {
                    found = true;
                    break;
                }
            if (found)
                ++hit;
            else if (rep.uncovered.size() < 8)
                rep.uncovered.push_back(ci);
        }
    }
    rep.fraction = static_cast<double>(hit) / static_cast<double>(cloud.points.size());
    return rep;
}

inline std::optional<double> boundary_scale(const MobiusDisk&) { return 1.0; }
inline std::optional<double> boundary_scale(const EinsteinBall& g) { return g.c; }
inline std::optional<double> boundary_scale(const TableGyro&) { return std::nullopt; }
inline std::optional<double> boundary_scale(const IntegerGyro&) { return std::nullopt; }

struct ClosedDiscreteReport {
    bool pass = false;
    double min_separation = 0.0; // over all pairs (ambient metric)
    std::optional<std::pair<std::size_t, std::size_t>> duplicate_pair;
    std::vector<double> separations; // per point: distance to nearest other
    double core_bound = 0.0;         // norm bound of the compact core
    std::size_t core_count = 0;      // points inside the core
    double min_core_separation = 0.0;
    std::size_t size = 0;
};

/// Truncation-level proxy for "closed and discrete": every point keeps a
/// punctured ambient ball free of the others, and inside the compact core
/// { ||x|| <= scale - boundary_margin } the count is finite with positive
/// separation. Duplicate points at dup_tol fail with a witness pair.
template <GyroCarrier G>
ClosedDiscreteReport closed_discrete_check(const G& g,
                                           const std::vector<typename G::element_type>& L,
                                           double boundary_margin, double dup_tol = 1e-12) {
    ClosedDiscreteReport rep;
    rep.size = L.size();
    auto scale = boundary_scale(g);
    rep.core_bound = scale ? *scale - boundary_margin
                           : std::numeric_limits<double>::infinity();
    rep.min_separation = std::numeric_limits<double>::infinity();
    rep.min_core_separation = std::numeric_limits<double>::infinity();
    rep.separations.assign(L.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < L.size(); ++i) {
        for (std::size_t j = i + 1; j < L.size(); ++j) {
            double d = g.dist(L[i], L[j]);
            rep.separations[i] = std::min(rep.separations[i], d);
            rep.separations[j] = std::min(rep.separations[j], d);
            if (d < rep.min_separation) {
                rep.min_separation = d;
                if (d <= dup_tol) rep.duplicate_pair = {i, j};
            }
            if (g.norm(L[i]) <= rep.core_bound && g.norm(L[j]) <= rep.core_bound)
                rep.min_core_separation = std::min(rep.min_core_separation, d);
        }
        if (g.norm(L[i]) <= rep.core_bound) ++rep.core_count;
    }
    if (L.size() <= 1) {
        rep.min_separation = std::numeric_limits<double>::infinity();
        rep.pass = true;
        return rep;
    }
    rep.pass = !rep.duplicate_pair.has_value();
    return rep;
}

} // namespace gyrolab
