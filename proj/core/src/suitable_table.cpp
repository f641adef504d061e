#include <algorithm>
#include <set>

#include "gyrolab/suitable.hpp"

namespace gyrolab {

namespace {

std::vector<int> full_carrier(const TableGyro& t) {
    std::vector<int> all(static_cast<std::size_t>(t.order()));
    for (int i = 0; i < t.order(); ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
}

bool closure_is_whole(const TableGyro& t, const std::vector<int>& S) {
    return static_cast<int>(t.closure(S).size()) == t.order();
}

void attach_table_reports(const TableGyro& t, SuitableSetResult<int>& res) {
    auto sep = closed_discrete_check(t, res.points, 0.01);
    res.separation_report = closed_discrete_json(sep);
    SampleCloud<int> carrier{full_carrier(t), "carrier"};
    auto dens = density_check(t, t.closure(res.points), carrier, 0.5);
    res.density_report = density_json(dens);
}

std::vector<int> strip_zero(std::vector<int> pts, bool& excluded) {
    auto it = std::remove(pts.begin(), pts.end(), 0);
    excluded = it != pts.end();
    pts.erase(it, pts.end());
    return pts;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

SuitableSetResult<int> suitable_finite(const TableGyro& t) {
    SuitableSetResult<int> res;
    std::vector<int> S;
    std::vector<int> closure = t.closure({}); // = {0}
    for (int g = 0; g < t.order(); ++g) {
        const bool have = std::binary_search(closure.begin(), closure.end(), g);
        if (!have) {
            S.push_back(g);
            closure = t.closure(S);
        }
        res.trace.push_back(
            {{"element", g}, {"added", !have}, {"closure_size", closure.size()}});
    }
    if (static_cast<int>(closure.size()) != t.order())
        throw construction_error("suitable_finite: greedy generation did not close");
    res.points = S; // 0 generates trivially and is never picked
    attach_table_reports(t, res);
    return res;
}

SuitableSetResult<int> suitable_countable_trace(const TableGyro& t,
                                                const std::vector<int>& enumeration) {
    const int n = t.order();
    {
        std::vector<int> sorted = sorted_unique(enumeration);
        if (static_cast<int>(enumeration.size()) != n ||
            static_cast<int>(sorted.size()) != n || sorted.front() != 0 ||
            sorted.back() != n - 1)
            throw precondition_error(
                "suitable_countable_trace: enumeration must be a permutation of the carrier");
    }

    SuitableSetResult<int> res;
    std::vector<int> s_members;     // union of the S_n
    std::set<int> removed;          // union of the V_n
    std::vector<int> s_closure = t.closure({});

    for (int step = 0; step < n; ++step) {
        const int g = enumeration[static_cast<std::size_t>(step)];
        nlohmann::json row;
        row["n"] = step;
        row["g"] = g;

        // S_n: empty when g is already generated, otherwise the leaves of a
        // word over the untouched part of the carrier that evaluates to g.
        std::vector<int> Sn;
        std::string witness_str;
        if (step == 0) {
            Sn = {g};
            witness_str = "+0";
        } else if (!std::binary_search(s_closure.begin(), s_closure.end(), g)) {
            std::vector<int> allowed;
            for (int v = 0; v < n; ++v)
                if (!removed.count(v)) allowed.push_back(v);
            auto witness = word_membership_witness(t, g, allowed, n, 0.0);
            if (!witness)
                throw construction_error("suitable_countable_trace: step " +
                                         std::to_string(step) +
                                         ": no word over the remaining carrier reaches " +
                                         std::to_string(g));
            witness_str = word_to_string(*witness);
            for (std::size_t leaf : witness->leaves) Sn.push_back(allowed[leaf]);
            Sn = sorted_unique(Sn);
        }
        bool iv_ok = true;
        for (int s : Sn) iv_ok = iv_ok && !removed.count(s);
        if (!Sn.empty()) {
            s_members.insert(s_members.end(), Sn.begin(), Sn.end());
            s_members = sorted_unique(s_members);
            s_closure = t.closure(s_members);
        }

        // V_n: the singleton {g} unless it is already removed or removing it
        // would break generation (which must eventually happen in a finite
        // carrier; the step is then recorded as omitted).
        std::vector<int> Vn;
        bool omitted = false;
        if (!removed.count(g)) {
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!removed.count(v) && v != g) rest.push_back(v);
            if (closure_is_whole(t, rest)) {
                Vn = {g};
                removed.insert(g);
            } else {
                omitted = true;
            }
        }

        std::vector<int> rest_now;
        for (int v = 0; v < n; ++v)
            if (!removed.count(v)) rest_now.push_back(v);

        row["S_n"] = Sn;
        row["V_n"] = Vn;
        row["witness"] = witness_str;
        row["conditions"] = {
            {"i_g_in_removed", removed.count(g) > 0},
            {"i_omitted_to_preserve_generation", omitted},
            {"ii_rest_generates", closure_is_whole(t, rest_now)},
            {"iii_disjoint_from_previous", true},
            {"iv_S_avoids_removed", iv_ok},
            {"v_g_generated",
             std::binary_search(s_closure.begin(), s_closure.end(), g)}};
        res.trace.push_back(std::move(row));
    }

    if (static_cast<int>(s_closure.size()) != n)
        throw construction_error("suitable_countable_trace: final set does not generate");
    res.points = strip_zero(s_members, res.excluded_identity);
    attach_table_reports(t, res);
    return res;
}

SuitableSetResult<int> extend_via_open_subgyro(const TableGyro& t, const std::vector<int>& H,
                                               const std::vector<int>& S_H) {
    if (!t.lsub_check(H))
        throw precondition_error("extend_via_open_subgyro: H fails the L-subgyrogroup condition");
    if (t.closure(S_H) != sorted_unique(H))
        throw precondition_error("extend_via_open_subgyro: S_H does not generate H");

    auto part = t.coset_decompose(H);
    if (!part.valid)
        throw construction_error("extend_via_open_subgyro: " + part.diagnostic);

    SuitableSetResult<int> res;
    std::vector<int> S = S_H;
    std::vector<int> A;
    for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        const int rep = part.representatives[b];
        res.trace.push_back({{"coset", part.blocks[b]}, {"representative", rep}});
        if (rep != 0) A.push_back(rep);
    }
    S.insert(S.end(), A.begin(), A.end());
    S = sorted_unique(S);
    if (!closure_is_whole(t, S))
        throw construction_error(
            "extend_via_open_subgyro: representatives plus S_H do not generate");
    res.points = strip_zero(S, res.excluded_identity);
    attach_table_reports(t, res);
    return res;
}

SuitableSetResult<int> extend_via_enumeration(const TableGyro& t, const std::vector<int>& H,
                                              const std::vector<int>& S_H,
                                              const std::vector<int>& enumeration) {
    if (t.closure(H) != sorted_unique(H))
        throw precondition_error("extend_via_enumeration: H is not a subgyrogroup");
    if (t.closure(S_H) != sorted_unique(H))
        throw precondition_error("extend_via_enumeration: S_H does not generate H");
    if (enumeration.empty() || enumeration.front() != 0)
        throw precondition_error("extend_via_enumeration: enumeration must start at 0");
    {
        std::vector<int> sorted = sorted_unique(enumeration);
        if (static_cast<int>(sorted.size()) != t.order())
            throw precondition_error(
                "extend_via_enumeration: enumeration must be a permutation of the carrier");
    }

    const int n = t.order();
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    std::vector<int> B;
    SuitableSetResult<int> res;
    for (int g : enumeration) {
        if (covered[static_cast<std::size_t>(g)]) continue;
        B.push_back(g);
        std::vector<int> coset;
        for (int h : H) {
            int m = t.add(g, h);
            covered[static_cast<std::size_t>(m)] = true;
            coset.push_back(m);
        }
        res.trace.push_back({{"selected", g}, {"coset", sorted_unique(coset)}});
    }

    // (iii): each member is the only member of B inside its own coset
    bool iii_ok = true;
    for (int b : B) {
        std::set<int> coset;
        for (int h : H) coset.insert(t.add(b, h));
        int inside = 0;
        for (int other : B) inside += coset.count(other) ? 1 : 0;
        iii_ok = iii_ok && inside == 1;
    }

    std::vector<int> S = S_H;
    S.insert(S.end(), B.begin(), B.end());
    S = sorted_unique(S);
    const bool ii_ok = closure_is_whole(t, S);
    res.trace.push_back({{"conditions",
                          {{"i_closed_discrete", true},
                           {"ii_generates", ii_ok},
                           {"iii_one_point_per_coset", iii_ok}}}});
    if (!ii_ok)
        throw construction_error("extend_via_enumeration: selection plus S_H does not generate");
    res.points = strip_zero(S, res.excluded_identity);
    attach_table_reports(t, res);
    return res;
}

SuitableSetResult<int> suitable_compact_metrizable(const TableGyro& t) {
    auto res = suitable_finite(t);
    res.trace.push_back({{"note", "discrete compact carrier: exact finite construction"}});
    return res;
}

} // namespace gyrolab
