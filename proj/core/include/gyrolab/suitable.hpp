#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include <json.hpp>

#include "gyrolab/closure.hpp"
#include "gyrolab/metric.hpp"
#include "gyrolab/serialize.hpp"

namespace gyrolab {

/// Shared configuration for the staged constructions. The radius schedule
/// plays the role of a shrinking neighborhood chain about 0, so it must be
/// strictly decreasing and positive.
struct ConstructionConfig {
    std::vector<double> radius_schedule = {0.4, 0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625};
    int word_cap = 8;
    std::size_t cloud_size = 1000;
    double dedup_tol = 1e-3;
    std::uint64_t seed = 0;
    double density_delta = 0.05;
    double density_min = 0.95; // pass bar for density fractions on continuous carriers
    std::size_t closure_budget = 2000000;
    double boundary_margin = 0.01;

    void validate() const {
        if (radius_schedule.empty())
            throw precondition_error("config: radius schedule is empty");
        double prev = std::numeric_limits<double>::infinity();
        for (double r : radius_schedule) {
            if (!(r > 0.0) || !(r < prev))
                throw precondition_error(
                    "config: radius schedule must be strictly decreasing and positive");
            prev = r;
        }
        if (word_cap < 2) throw precondition_error("config: word cap must be >= 2");
        if (cloud_size < 1) throw precondition_error("config: cloud size must be >= 1");
        if (!(dedup_tol > 0.0)) throw precondition_error("config: dedup tolerance must be positive");
        if (!(density_delta > 0.0)) throw precondition_error("config: density delta must be positive");
        if (!(density_min > 0.0) || density_min > 1.0)
            throw precondition_error("config: density bar must lie in (0, 1]");
    }
};

/// Constructed point set with its per-step trace and verification reports.
/// The identity never appears among the points; when a construction produces
/// it, it is stripped and the flag below records that.
template <typename E>
struct SuitableSetResult {
    std::vector<E> points;
    bool excluded_identity = false;
    nlohmann::json trace = nlohmann::json::array();
    nlohmann::json separation_report;
    nlohmann::json density_report;
};

template <GyroCarrier G>
nlohmann::json suitable_result_json(const G& g,
                                    const SuitableSetResult<typename G::element_type>& r) {
    return {{"points", points_json(g, r.points)},
            {"point_count", r.points.size()},
            {"excluded_identity", r.excluded_identity},
            {"trace", r.trace},
            {"separation_report", r.separation_report},
            {"density_report", r.density_report}};
}

// ---------------------------------------------------------------------------
// finite tables

/// Greedy generating set with exact closure equal to the whole carrier, 0
/// excluded. In a discrete carrier every subset is closed and discrete, so
/// the suitable-set conditions reduce to generation. An order-1 carrier
/// yields the empty set, which is valid: <{}> = {0}.
SuitableSetResult<int> suitable_finite(const TableGyro& t);

/// Stepwise construction along an enumeration of the carrier: per step a
/// finite word-witnessed piece S_n drawn away from the removed clopen sets
/// V_n, with the five per-step conditions recorded in the trace. Singleton
/// V_n are omitted (with a note) when their removal would break generation,
/// which in a finite carrier must eventually happen.
SuitableSetResult<int> suitable_countable_trace(const TableGyro& t,
                                                const std::vector<int>& enumeration);

/// Coset extension: representatives of the cosets of an open L-subgyrogroup
/// H (one per coset, identity's coset excluded) joined with a generating set
/// of H. Requires lsub_check(H) and <S_H> = H exactly.
SuitableSetResult<int> extend_via_open_subgyro(const TableGyro& t, const std::vector<int>& H,
                                               const std::vector<int>& S_H);

/// Enumeration-driven coset selection: scanning the enumeration, the first
/// element of each not-yet-covered coset joins B (minimal-index rule), so
/// B meets each of its cosets exactly once. Requires <S_H> = H and an
/// enumeration starting at 0.
SuitableSetResult<int> extend_via_enumeration(const TableGyro& t, const std::vector<int>& H,
                                              const std::vector<int>& S_H,
                                              const std::vector<int>& enumeration);

/// Compact discrete carrier: reduces to the exact finite construction.
SuitableSetResult<int> suitable_compact_metrizable(const TableGyro& t);

// ---------------------------------------------------------------------------
// the disk

/// Staged construction of a closed discrete generating set L inside the
/// word closure P of the given generators. Per step k the whole sample
/// cloud is covered by translated balls of radius r_k centered at words
/// over L of length <= word_cap (fraction 1.0 or the step fails), the
/// points added at step k+1 have norm <= r_k, and the k-th enumerated
/// element of P acquires an explicit word witness.
SuitableSetResult<std::complex<double>> suitable_precompact_disk(
    const MobiusDisk& g, const std::vector<std::complex<double>>& generators,
    const ConstructionConfig& cfg);

/// Same skeleton with a schedule that contracts to the resolution proxy for
/// "the neighborhoods intersect in {0}": the last radius must be at most
/// 4 * dedup_tol.
SuitableSetResult<std::complex<double>> suitable_compact_metrizable(
    const MobiusDisk& g, const std::vector<std::complex<double>>& generators,
    const ConstructionConfig& cfg);

// ---------------------------------------------------------------------------
// discrete non-precompact carriers

/// Case split on covering behavior at the hint radius: when a greedy cover
/// of the sampled carrier reuses centers (left precompact at this scale) the
/// construction aborts and advises the precompact path; otherwise it builds
/// a greedy separated family A over the lazy enumeration, pairs it with the
/// dense sequence b_n, and returns A together with the sums a_n (+) b_n.
template <GyroCarrier G>
SuitableSetResult<typename G::element_type> suitable_nonprecompact(const G& g,
                                                                   double u_size_hint,
                                                                   std::size_t budget) {
    using E = typename G::element_type;
    if (budget < 1) throw precondition_error("suitable_nonprecompact: budget must be >= 1");
    if (!(u_size_hint >= 0.0))
        throw precondition_error("suitable_nonprecompact: radius hint must be >= 0");

    const std::size_t cloud_n = std::max<std::size_t>(4 * budget, 256);
    SampleCloud<E> cloud;
    if constexpr (std::same_as<G, IntegerGyro>) {
        for (std::size_t i = 0; i < cloud_n; ++i)
            cloud.points.push_back(IntegerGyro::enumerate(i));
        cloud.description = "enumeration prefix";
    } else {
        cloud = random_cloud(g, cloud_n, 0, "nonprecompact_cloud");
    }

    auto gate = precompact_witness(g, ball_at_zero(g, u_size_hint), cloud);
    if (gate.centers.size() < cloud.points.size())
        throw construction_error(
            "suitable_nonprecompact: carrier looks left precompact at radius " +
            format_double(u_size_hint) + " (" + std::to_string(gate.centers.size()) +
            " centers cover " + std::to_string(cloud.points.size()) +
            " sample points); use the precompact construction instead");

    auto A = greedy_separated_family(g, ball_at_zero(g, u_size_hint), budget, cloud);

    SuitableSetResult<E> res;
    std::vector<E> raw = A;
    for (std::size_t i = 0; i < A.size(); ++i) raw.push_back(g.add(A[i], cloud.points[i]));
    for (const auto& v : raw) {
        if (g.eq(v, g.identity(), 0.0)) {
            res.excluded_identity = true;
            continue;
        }
        bool dup = false;
        for (const auto& u : res.points)
            if (g.eq(u, v, 0.0)) {
                dup = true;
                break;
            }
        if (!dup) res.points.push_back(v);
    }

    auto sep = closed_discrete_check(g, res.points, 0.01);
    res.separation_report = closed_discrete_json(sep);

    // Generation against the enumerated truncation: every truncation element
    // must appear in the word closure of S.
    std::vector<E> truncation(cloud.points.begin(),
                              cloud.points.begin() +
                                  static_cast<std::ptrdiff_t>(std::min(budget, cloud.points.size())));
    std::size_t generated = 0;
    if (!res.points.empty()) {
        ClosureOptions opt;
        opt.max_word_len = 4;
        opt.max_elements = std::max<std::size_t>(budget * 64, 4096);
        auto cl = closure_generate(g, res.points, opt);
        for (const auto& t : truncation) {
            for (const auto& v : cl.elements)
                if (g.eq(v, t, 0.0)) {
                    ++generated;
                    break;
                }
        }
    } else {
        for (const auto& t : truncation)
            if (g.eq(t, g.identity(), 0.0)) ++generated;
    }
    const double frac = truncation.empty()
                            ? 1.0
                            : static_cast<double>(generated) / static_cast<double>(truncation.size());

    res.trace.push_back({{"gate", {{"radius", u_size_hint},
                                   {"cover_centers", gate.centers.size()},
                                   {"cloud_size", cloud.points.size()}}},
                         {"family_size", A.size()},
                         {"pair_count", A.size()},
                         {"truncation_size", truncation.size()},
                         {"generated_fraction", frac}});
    res.density_report = {{"fraction", frac},
                          {"truncation_size", truncation.size()},
                          {"meaning", "fraction of the enumerated truncation inside <S>"}};
    return res;
}

// ---------------------------------------------------------------------------
// verification

/// Bundled verdicts for the suitable-set conditions at finite resolution:
/// (1) S u {0} has no duplicate points and accumulation is tolerated only at
/// 0; (2) the word closure of S is dense against a sample cloud at
/// density_delta (exact coverage for exact carriers); (3) 0 is not in S.
template <GyroCarrier G>
nlohmann::json verify_suitable(const G& g, const std::vector<typename G::element_type>& S,
                               const ConstructionConfig& cfg) {
    using E = typename G::element_type;
    nlohmann::json out;

    bool zero_excluded = true;
    for (const auto& s : S)
        if (g.eq(s, g.identity(), G::exact_carrier ? 0.0 : 1e-15)) zero_excluded = false;
    out["zero_excluded"] = zero_excluded;

    std::vector<E> with_zero = S;
    with_zero.push_back(g.identity());
    auto sep = closed_discrete_check(g, with_zero, cfg.boundary_margin);
    out["discrete"] = closed_discrete_json(sep);
    const bool discrete_pass = sep.pass;

    SampleCloud<E> cloud;
    if constexpr (std::same_as<G, TableGyro>) {
        for (int i = 0; i < g.order(); ++i) cloud.points.push_back(i);
        cloud.description = "carrier";
    } else if constexpr (std::same_as<G, IntegerGyro>) {
        for (std::size_t i = 0; i < cfg.cloud_size; ++i)
            cloud.points.push_back(IntegerGyro::enumerate(i));
        cloud.description = "enumeration prefix";
    } else {
        cloud = random_cloud(g, cfg.cloud_size, cfg.seed, "verify_cloud");
    }

    DensityReport dens;
    if (S.empty()) {
        dens.delta = cfg.density_delta;
        dens.cloud_size = cloud.points.size();
        std::size_t hit = 0;
        for (const auto& x : cloud.points)
            if (g.eq(x, g.identity(), G::exact_carrier ? 0.0 : cfg.density_delta)) ++hit;
        dens.fraction = cloud.points.empty()
                            ? 1.0
                            : static_cast<double>(hit) / static_cast<double>(cloud.points.size());
    } else {
        ClosureOptions opt;
        opt.max_word_len = cfg.word_cap;
        opt.dedup_tol = cfg.dedup_tol;
        opt.max_elements = cfg.closure_budget;
        auto cl = closure_generate(g, S, opt);
        const double delta = G::exact_carrier ? std::min(cfg.density_delta, 0.5)
                                              : cfg.density_delta;
        dens = density_check(g, cl.elements, cloud, delta);
        out["closure_truncated"] = cl.truncated;
        out["closure_size"] = cl.elements.size();
    }
    out["density"] = density_json(dens);
    const double bar = G::exact_carrier ? 1.0 : cfg.density_min;
    const bool density_pass = dens.fraction >= bar;
    out["density_pass"] = density_pass;
    out["pass"] = zero_excluded && discrete_pass && density_pass;
    return out;
}

} // namespace gyrolab
