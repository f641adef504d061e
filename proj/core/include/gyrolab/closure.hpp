#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gyrolab/carrier.hpp"
#include "gyrolab/einstein.hpp"
#include "gyrolab/errors.hpp"
#include "gyrolab/integers.hpp"
#include "gyrolab/mobius.hpp"
#include "gyrolab/table.hpp"
#include "gyrolab/words.hpp"

namespace gyrolab {

/// Quantization key for near-duplicate suppression on a metric grid.
struct CellKey {
    std::int64_t q0 = 0, q1 = 0, q2 = 0;
    bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::int64_t v : {k.q0, k.q1, k.q2}) {
            std::uint64_t s = h ^ static_cast<std::uint64_t>(v);
            h = splitmix64(s);
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::int64_t quantize(double x, double cell) {
    return static_cast<std::int64_t>(std::floor(x / cell));
}

inline CellKey cell_key(const MobiusDisk&, std::complex<double> z, double cell) {
    return {quantize(z.real(), cell), quantize(z.imag(), cell), 0};
}
inline CellKey cell_key(const EinsteinBall&, const Vec3& v, double cell) {
    return {quantize(v[0], cell), quantize(v[1], cell), quantize(v[2], cell)};
}
inline CellKey cell_key(const TableGyro&, int a, double) { return {a, 0, 0}; }
inline CellKey cell_key(const IntegerGyro&, long long a, double) { return {a, 0, 0}; }

struct ClosureOptions {
    int max_word_len = 8;
    double dedup_tol = 1e-3;            // grid cell size on continuous carriers
    std::size_t max_elements = 2000000; // element budget; exceeding it truncates
};

/// Values of all signed bracketed words over a generator list, organized by
/// word length (number of leaves). Every element carries its provenance —
/// either a signed leaf or the pair of shorter elements it was added from —
/// so the canonical word reaching any element can be reconstructed.
///
/// Enumeration order is canonical and deterministic: lengths ascending;
/// within a length, splits (left length, right length) with the left length
/// ascending; within a split, stored left values outer, right values inner.
/// Length-1 entries are +g0, +g1, ..., then -g0, -g1, ... Deduplication
/// keeps the first value landing in each grid cell (exact key for exact
/// carriers), so each stored element's provenance is the earliest word in
/// this order that reaches its cell.
template <GyroCarrier G>
struct ClosureSet {
    using element_type = typename G::element_type;

    struct Provenance {
        std::int32_t left = -1;  // elements index, or -1 for a leaf
        std::int32_t right = -1; // elements index, or -1 for a leaf
        std::int8_t sign = 0;    // leaf sign when a leaf
        std::int32_t leaf = -1;  // generator index when a leaf
    };

    std::vector<element_type> elements;
    std::vector<std::int32_t> word_len;
    std::vector<Provenance> prov;
    std::vector<element_type> generators;
    int frontier_word_length = 0; // last fully enumerated word length
    bool truncated = false;

    /// Elements appended by the exact gyration-stability pass on finite
    /// tables (indices >= this bound have no word provenance).
    std::size_t word_indexed_count = 0;

    std::size_t size() const { return elements.size(); }

    /// Canonical word reaching elements[idx]; only word-indexed entries.
    WordSpec word_of(std::size_t idx) const {
        if (idx >= word_indexed_count)
            throw precondition_error("word_of: element has no word provenance");
        const auto& p = prov[idx];
        if (p.left < 0) {
            WordSpec w;
            w.signs = {p.sign};
            w.leaves = {static_cast<std::size_t>(p.leaf)};
            w.tree = enumerate_trees(1).front();
            return w;
        }
        WordSpec l = word_of(static_cast<std::size_t>(p.left));
        WordSpec r = word_of(static_cast<std::size_t>(p.right));
        WordSpec w;
        w.signs = l.signs;
        w.signs.insert(w.signs.end(), r.signs.begin(), r.signs.end());
        w.leaves = l.leaves;
        w.leaves.insert(w.leaves.end(), r.leaves.begin(), r.leaves.end());
        w.tree = join_trees(l.tree, r.tree);
        return w;
    }
};

/// Word-value closure of a generator list: all values of signed bracketed
/// words of length <= max_word_len, generated breadth-first by length and
/// deduplicated on the metric grid. A finite-table carrier gets an extra
/// exact pass closing the value set under gyr[x,y] restricted to it, since
/// subgyrogroups must be gyration-stable. Exceeding the element budget
/// flags the result truncated, never silently complete.
template <GyroCarrier G>
ClosureSet<G> closure_generate(const G& g,
                               const std::vector<typename G::element_type>& gens,
                               const ClosureOptions& opt) {
    if (gens.empty()) throw precondition_error("closure_generate: generator list is empty");
    if (opt.max_word_len < 1)
        throw precondition_error("closure_generate: max word length must be >= 1");
    if (!(opt.dedup_tol > 0.0) && !G::exact_carrier)
        throw precondition_error("closure_generate: dedup tolerance must be positive");

    ClosureSet<G> out;
    out.generators = gens;
    std::unordered_map<CellKey, std::int32_t, CellKeyHash> seen;
    seen.reserve(1 << 16);

    std::vector<std::size_t> level_begin{0, 0}; // level_begin[len] .. level_end[len]
    std::vector<std::size_t> level_end{0, 0};

    auto insert = [&](const typename G::element_type& v, std::int32_t len,
                      typename ClosureSet<G>::Provenance p) -> bool {
        if (out.elements.size() >= opt.max_elements) {
            out.truncated = true;
            return false;
        }
        auto key = cell_key(g, v, opt.dedup_tol);
        auto [it, fresh] = seen.emplace(key, static_cast<std::int32_t>(out.elements.size()));
        if (!fresh) return true;
        out.elements.push_back(v);
        out.word_len.push_back(len);
        out.prov.push_back(p);
        return true;
    };

    // length 1: +g0, +g1, ..., then -g0, -g1, ...
    level_begin[1] = 0;
    for (std::int8_t sign : {std::int8_t(1), std::int8_t(-1)}) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            auto v = sign > 0 ? gens[i] : g.inv(gens[i]);
            if (!insert(v, 1, {-1, -1, sign, static_cast<std::int32_t>(i)})) goto done;
        }
    }
    level_end[1] = out.elements.size();
    out.frontier_word_length = 1;

    for (int len = 2; len <= opt.max_word_len; ++len) {
        level_begin.push_back(out.elements.size());
        level_end.push_back(out.elements.size());
        for (int ls = 1; ls < len; ++ls) {
            const int rs = len - ls;
            for (std::size_t li = level_begin[static_cast<std::size_t>(ls)];
                 li < level_end[static_cast<std::size_t>(ls)]; ++li) {
                for (std::size_t ri = level_begin[static_cast<std::size_t>(rs)];
                     ri < level_end[static_cast<std::size_t>(rs)]; ++ri) {
                    auto v = g.add(out.elements[li], out.elements[ri]);
                    if (!insert(v, len,
                                {static_cast<std::int32_t>(li), static_cast<std::int32_t>(ri),
                                 0, -1}))
                        goto done;
                }
            }
        }
        level_end.back() = out.elements.size();
        out.frontier_word_length = len;
    }
done:
    out.word_indexed_count = out.elements.size();

    if constexpr (std::same_as<G, TableGyro>) {
        // Exact gyration-stability pass: anything the word values miss under
        // gyr[x,y] (x, y in the set) is appended without word provenance.
        std::vector<int> seed_vals;
        seed_vals.reserve(out.elements.size());
        for (auto v : out.elements) seed_vals.push_back(v);
        for (int v : g.closure(seed_vals)) {
            auto key = cell_key(g, v, opt.dedup_tol);
            if (seen.emplace(key, static_cast<std::int32_t>(out.elements.size())).second) {
                out.elements.push_back(v);
                out.word_len.push_back(-1);
                out.prov.push_back({-1, -1, 0, -1});
            }
        }
    }
    return out;
}

/// First closure element within `tol` of the target, as a canonical word:
/// search order is word length ascending, then the closure's canonical
/// in-length order. Budget exhaustion is a normal not-found.
template <GyroCarrier G>
std::optional<WordSpec> word_membership_witness(const G& g,
                                                const typename G::element_type& target,
                                                const std::vector<typename G::element_type>& S,
                                                int max_word_len, double tol,
                                                std::size_t budget = 500000) {
    ClosureOptions opt;
    opt.max_word_len = max_word_len;
    opt.dedup_tol = G::exact_carrier ? 1.0 : std::max(tol / 4.0, 1e-9);
    opt.max_elements = budget;
    auto closure = closure_generate(g, S, opt);
    for (std::size_t i = 0; i < closure.word_indexed_count; ++i) {
        if (g.eq(closure.elements[i], target, tol)) return closure.word_of(i);
    }
    return std::nullopt;
}

} // namespace gyrolab
