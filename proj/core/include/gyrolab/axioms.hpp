#pragma once

#include <atomic>
#include <cstdio>
#include <thread>
#include <vector>

#include "gyrolab/carrier.hpp"
#include "gyrolab/errors.hpp"
#include "gyrolab/report.hpp"

namespace gyrolab {

/// Worker cap for sample scans; reads GYRO_THREADS, defaults to 1.
std::size_t worker_count();

namespace detail {

constexpr std::size_t kScanChunk = 8192;

struct MaxTracker {
    double value = -1.0;
    std::vector<std::string> witness;

    template <typename WitnessFn>
    void offer(double r, WitnessFn&& fn) {
        if (r > value) {
            value = r;
            witness = fn();
        }
    }
    void merge(const MaxTracker& o) {
        if (o.value > value) {
            value = o.value;
            witness = o.witness;
        }
    }
    double clamped() const { return value < 0.0 ? 0.0 : value; }
};

/// Runs body(rng, count, partial) over fixed-size chunks of the sample
/// budget, each chunk with its own derived sub-stream. The chunk layout does
/// not depend on the worker count, so any GYRO_THREADS setting produces the
/// same merged result.
template <typename Partial, typename Body>
Partial chunked_scan(std::size_t n, std::uint64_t seed, std::string_view label,
                     Body&& body) {
    const std::size_t chunks = (n + kScanChunk - 1) / kScanChunk;
    std::vector<Partial> parts(chunks);
    auto run_chunk = [&](std::size_t c) {
        auto rng = RngStream::derive(seed, label, c);
        const std::size_t count = std::min(kScanChunk, n - c * kScanChunk);
        body(rng, count, parts[c]);
    };
    const std::size_t workers = std::min(worker_count(), chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t c = next.fetch_add(1);
                    if (c >= chunks) return;
                    run_chunk(c);
                }
            });
        for (auto& t : pool) t.join();
    }
    Partial out = std::move(parts.front());
    for (std::size_t c = 1; c < chunks; ++c) out.merge(parts[c]);
    return out;
}

inline void require_scan_params(std::size_t n, double tol, const char* op) {
    if (n < 1) throw precondition_error(std::string(op) + ": sample count must be >= 1");
    if (!(tol > 0.0)) throw precondition_error(std::string(op) + ": tolerance must be positive");
}

inline std::string radius_tag(const char* base, double r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s(r=%g)", base, r);
    return buf;
}

} // namespace detail

/// Residuals of 0 (+) a = a, a (+) 0 = a, (-a) (+) a = 0 and a (+) (-a) = 0
/// over n sampled elements.
template <GyroCarrier G>
AxiomReport check_identity_inverse(const G& g, std::size_t n, double tol,
                                   std::uint64_t seed) {
    detail::require_scan_params(n, tol, "check_identity_inverse");
    struct Partial {
        detail::MaxTracker t[4];
        void merge(const Partial& o) {
            for (int i = 0; i < 4; ++i) t[i].merge(o.t[i]);
        }
    };
    auto part = detail::chunked_scan<Partial>(
        n, seed, "identity_inverse", [&](RngStream& rng, std::size_t count, Partial& p) {
            const auto zero = g.identity();
            for (std::size_t i = 0; i < count; ++i) {
                const auto a = g.sample(rng);
                auto wit = [&] { return std::vector<std::string>{g.format(a)}; };
                p.t[0].offer(g.dist(g.add(zero, a), a), wit);
                p.t[1].offer(g.dist(g.add(a, zero), a), wit);
                p.t[2].offer(g.dist(g.add(g.inv(a), a), zero), wit);
                p.t[3].offer(g.dist(g.add(a, g.inv(a)), zero), wit);
            }
        });
    AxiomReport r;
    r.carrier = g.name();
    const char* names[4] = {"left_identity", "right_identity", "left_inverse",
                            "right_inverse"};
    for (int i = 0; i < 4; ++i)
        r.entries.push_back({names[i], part.t[i].clamped(), tol, part.t[i].witness, n, seed});
    return r;
}

/// Residual of x (+) (y (+) z) = (x (+) y) (+) gyr[x,y](z) over n sampled
/// triples.
template <GyroCarrier G>
AxiomReport check_gyroassociativity(const G& g, std::size_t n, double tol,
                                    std::uint64_t seed) {
    detail::require_scan_params(n, tol, "check_gyroassociativity");
    struct Partial {
        detail::MaxTracker t;
        void merge(const Partial& o) { t.merge(o.t); }
    };
    auto part = detail::chunked_scan<Partial>(
        n, seed, "gyroassociativity", [&](RngStream& rng, std::size_t count, Partial& p) {
            for (std::size_t i = 0; i < count; ++i) {
                const auto x = g.sample(rng);
                const auto y = g.sample(rng);
                const auto z = g.sample(rng);
                const auto lhs = g.add(x, g.add(y, z));
                const auto rhs = g.add(g.add(x, y), g.gyr(x, y, z));
                p.t.offer(g.dist(lhs, rhs), [&] {
                    return std::vector<std::string>{g.format(x), g.format(y), g.format(z)};
                });
            }
        });
    AxiomReport r;
    r.carrier = g.name();
    r.entries.push_back({"gyroassociativity", part.t.clamped(), tol, part.t.witness, n, seed});
    return r;
}

/// Left loop property gyr[x (+) y, y] = gyr[x, y], decided pointwise on
/// n_probes sampled z per sampled pair (x, y).
template <GyroCarrier G>
AxiomReport check_left_loop(const G& g, std::size_t n_pairs, std::size_t n_probes,
                            double tol, std::uint64_t seed) {
    detail::require_scan_params(n_pairs, tol, "check_left_loop");
    if (n_probes < 1)
        throw precondition_error("check_left_loop: probe count must be >= 1");
    struct Partial {
        detail::MaxTracker t;
        void merge(const Partial& o) { t.merge(o.t); }
    };
    auto part = detail::chunked_scan<Partial>(
        n_pairs, seed, "left_loop", [&](RngStream& rng, std::size_t count, Partial& p) {
            for (std::size_t i = 0; i < count; ++i) {
                const auto x = g.sample(rng);
                const auto y = g.sample(rng);
                const auto xy = g.add(x, y);
                for (std::size_t j = 0; j < n_probes; ++j) {
                    const auto z = g.sample(rng);
                    p.t.offer(g.dist(g.gyr(xy, y, z), g.gyr(x, y, z)), [&] {
                        return std::vector<std::string>{g.format(x), g.format(y), g.format(z)};
                    });
                }
            }
        });
    AxiomReport r;
    r.carrier = g.name();
    r.entries.push_back(
        {"left_loop", part.t.clamped(), tol, part.t.witness, n_pairs * n_probes, seed});
    return r;
}

/// Residual of gyr[a,b](x (+) y) = gyr[a,b](x) (+) gyr[a,b](y) over n sampled
/// quadruples: gyrations must be groupoid homomorphisms.
template <GyroCarrier G>
AxiomReport check_gyr_automorphism(const G& g, std::size_t n, double tol,
                                   std::uint64_t seed) {
    detail::require_scan_params(n, tol, "check_gyr_automorphism");
    struct Partial {
        detail::MaxTracker t;
        void merge(const Partial& o) { t.merge(o.t); }
    };
    auto part = detail::chunked_scan<Partial>(
        n, seed, "gyr_automorphism", [&](RngStream& rng, std::size_t count, Partial& p) {
            for (std::size_t i = 0; i < count; ++i) {
                const auto a = g.sample(rng);
                const auto b = g.sample(rng);
                const auto x = g.sample(rng);
                const auto y = g.sample(rng);
                const auto lhs = g.gyr(a, b, g.add(x, y));
                const auto rhs = g.add(g.gyr(a, b, x), g.gyr(a, b, y));
                p.t.offer(g.dist(lhs, rhs), [&] {
                    return std::vector<std::string>{g.format(a), g.format(b), g.format(x),
                                                    g.format(y)};
                });
            }
        });
    AxiomReport r;
    r.carrier = g.name();
    r.entries.push_back({"gyr_automorphism", part.t.clamped(), tol, part.t.witness, n, seed});
    return r;
}

/// Residual of a = (a (+) v) (+) gyr[a,v](-v) over n sampled pairs.
template <GyroCarrier G>
AxiomReport check_right_cancellation(const G& g, std::size_t n, double tol,
                                     std::uint64_t seed) {
    detail::require_scan_params(n, tol, "check_right_cancellation");
    struct Partial {
        detail::MaxTracker t;
        void merge(const Partial& o) { t.merge(o.t); }
    };
    auto part = detail::chunked_scan<Partial>(
        n, seed, "right_cancellation", [&](RngStream& rng, std::size_t count, Partial& p) {
            for (std::size_t i = 0; i < count; ++i) {
                const auto a = g.sample(rng);
                const auto v = g.sample(rng);
                const auto back = g.add(g.add(a, v), g.gyr(a, v, g.inv(v)));
                p.t.offer(g.dist(a, back), [&] {
                    return std::vector<std::string>{g.format(a), g.format(v)};
                });
            }
        });
    AxiomReport r;
    r.carrier = g.name();
    r.entries.push_back(
        {"right_cancellation", part.t.clamped(), tol, part.t.witness, n, seed});
    return r;
}

/// For each radius r and sampled (x, y, u) with u in the norm ball U_r:
/// containment slack max(0, ||gyr[x,y](u)|| - r), norm preservation
/// | ||gyr[x,y](u)|| - ||u|| |, and the round trip gyr[x,y](gyr[y,x](u)) = u
/// (gyr[y,x] inverts gyr[x,y]). Carriers without norm-ball sampling are
/// rejected with unsupported_error.
template <GyroCarrier G>
AxiomReport check_strong_ball_invariance(const G& g, const std::vector<double>& radii,
                                         std::size_t n, double tol,
                                         std::uint64_t seed) {
    if constexpr (!BallSamplingCarrier<G>) {
        (void)radii;
        (void)n;
        (void)tol;
        (void)seed;
        throw unsupported_error(g.name() +
                                ": carrier has no ambient norm-ball sampling; "
                                "ball invariance is undefined here");
    } else {
        detail::require_scan_params(n, tol, "check_strong_ball_invariance");
        if (radii.empty())
            throw precondition_error("check_strong_ball_invariance: radius list is empty");
        for (double r : radii)
            if (!(r > 0.0))
                throw precondition_error("check_strong_ball_invariance: radii must be positive");

        AxiomReport out;
        out.carrier = g.name();
        struct Partial {
            detail::MaxTracker t[3];
            void merge(const Partial& o) {
                for (int i = 0; i < 3; ++i) t[i].merge(o.t[i]);
            }
        };
        for (std::size_t ri = 0; ri < radii.size(); ++ri) {
            const double r = radii[ri];
            auto part = detail::chunked_scan<Partial>(
                n, seed ^ (0x51ed2700ULL + ri), "ball_invariance",
                [&](RngStream& rng, std::size_t count, Partial& p) {
                    for (std::size_t i = 0; i < count; ++i) {
                        const auto x = g.sample(rng);
                        const auto y = g.sample(rng);
                        const auto u = g.sample_ball(r, rng);
                        const auto gu = g.gyr(x, y, u);
                        auto wit = [&] {
                            return std::vector<std::string>{g.format(x), g.format(y),
                                                            g.format(u)};
                        };
                        const double ngu = g.norm(gu);
                        p.t[0].offer(ngu > r ? ngu - r : 0.0, wit);
                        const double nd = ngu - g.norm(u);
                        p.t[1].offer(nd < 0 ? -nd : nd, wit);
                        p.t[2].offer(g.dist(g.gyr(x, y, g.gyr(y, x, u)), u), wit);
                    }
                });
            const char* names[3] = {"ball_containment", "gyr_norm_preservation",
                                    "gyr_inverse_roundtrip"};
            for (int i = 0; i < 3; ++i)
                out.entries.push_back({detail::radius_tag(names[i], r), part.t[i].clamped(),
                                       tol, part.t[i].witness, n, seed});
        }
        return out;
    }
}

struct AxiomSuiteParams {
    std::size_t samples = 100000;
    std::size_t probes = 8; // pointwise probes per pair for the left loop
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::vector<double> ball_radii = {0.25, 0.5, 0.99};
};

/// Runs every axiom check against one carrier; ball invariance is skipped
/// with a note when the carrier cannot sample norm balls.
template <GyroCarrier G>
AxiomReport run_axiom_suite(const G& g, const AxiomSuiteParams& p) {
    AxiomReport r;
    r.carrier = g.name();
    r.append(check_identity_inverse(g, p.samples, p.tol, p.seed));
    r.append(check_gyroassociativity(g, p.samples, p.tol, p.seed));
    const std::size_t pairs = std::max<std::size_t>(1, p.samples / p.probes);
    r.append(check_left_loop(g, pairs, p.probes, p.tol, p.seed));
    r.append(check_gyr_automorphism(g, p.samples, p.tol, p.seed));
    r.append(check_right_cancellation(g, p.samples, p.tol, p.seed));
    if constexpr (BallSamplingCarrier<G>) {
        r.append(check_strong_ball_invariance(g, p.ball_radii, p.samples, p.tol, p.seed));
    } else {
        r.notes.push_back("ball_invariance skipped: " + g.name() +
                          " has no ambient norm-ball sampling");
    }
    return r;
}

} // namespace gyrolab
