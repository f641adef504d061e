#include <doctest.h>

#include <set>

#include "gyrolab/closure.hpp"
#include "gyrolab/integers.hpp"
#include "gyrolab/mobius.hpp"
#include "gyrolab/table.hpp"
#include "gyrolab/words.hpp"

using namespace gyrolab;
using Cx = std::complex<double>;

namespace {

// independent bracketing count: T(1) = 1, T(n) = sum T(k) T(n-k)
std::uint64_t tree_count_oracle(int n) {
    std::vector<std::uint64_t> t(static_cast<std::size_t>(n) + 1, 0);
    t[1] = 1;
    for (int m = 2; m <= n; ++m)
        for (int k = 1; k < m; ++k)
            t[static_cast<std::size_t>(m)] +=
                t[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(m - k)];
    return t[static_cast<std::size_t>(n)];
}

} // namespace

TEST_CASE("tree enumeration matches the recursive oracle for n = 1..10") {
    for (int n = 1; n <= 10; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(trees.size() == tree_count_oracle(n));
        CHECK(trees.size() == catalan(n - 1));
        for (std::size_t m = 0; m < trees.size(); ++m) {
            CHECK(trees[m].index == m);
            CHECK(trees[m].leaf_count == n);
        }
    }
    CHECK_THROWS_AS(enumerate_trees(0), precondition_error);
    CHECK_THROWS_AS(enumerate_trees(15), precondition_error);
}

TEST_CASE("enumeration is a bijection: serialized forms are distinct") {
    for (int n = 2; n <= 7; ++n) {
        auto trees = enumerate_trees(n);
        std::set<std::string> forms;
        for (const auto& t : trees) {
            WordSpec w;
            w.signs.assign(static_cast<std::size_t>(n), 1);
            w.leaves.resize(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < w.leaves.size(); ++i) w.leaves[i] = i;
            w.tree = t;
            forms.insert(word_to_string(w));
        }
        CHECK(forms.size() == trees.size());
    }
}

TEST_CASE("join_trees computes the canonical index") {
    for (int n = 2; n <= 6; ++n) {
        auto trees = enumerate_trees(n);
        for (int ls = 1; ls < n; ++ls) {
            for (const auto& l : enumerate_trees(ls)) {
                for (const auto& r : enumerate_trees(n - ls)) {
                    auto j = join_trees(l, r);
                    CHECK(j.leaf_count == n);
                    REQUIRE(j.index < trees.size());
                    // same shape as the enumerated tree at that index
                    WordSpec a, b;
                    a.signs.assign(static_cast<std::size_t>(n), 1);
                    a.leaves.resize(static_cast<std::size_t>(n));
                    for (std::size_t i = 0; i < a.leaves.size(); ++i) a.leaves[i] = i;
                    b = a;
                    a.tree = j;
                    b.tree = trees[j.index];
                    CHECK(word_to_string(a) == word_to_string(b));
                }
            }
        }
    }
}

TEST_CASE("word evaluation on the trivial and group-induced cases") {
    MobiusDisk d;
    WordSpec w;
    w.signs = {1};
    w.leaves = {0};
    w.tree = enumerate_trees(1).front();
    std::vector<Cx> assign{{0.3, 0.1}};
    CHECK(eval_word(d, w, assign) == assign[0]);

    w.signs = {-1};
    CHECK(eval_word(d, w, assign) == -assign[0]);

    // every bracketing agrees on a group-induced carrier
    IntegerGyro z;
    auto rng = RngStream::derive(9, "assoc");
    for (int n = 2; n <= 6; ++n) {
        std::vector<long long> vals;
        std::vector<std::int8_t> signs;
        for (int i = 0; i < n; ++i) {
            vals.push_back(static_cast<long long>(rng.index(19)) - 9);
            signs.push_back(rng.unit() < 0.5 ? std::int8_t(1) : std::int8_t(-1));
        }
        auto rs = r_set(z, signs, vals, 0.0);
        CHECK(rs.size() == 1);
    }
}

TEST_CASE("the witness triple produces a two-element bracketing set") {
    MobiusDisk d;
    std::vector<Cx> leaves{{0.5, 0}, {0, 0.5}, {-0.5, 0}};
    std::vector<std::int8_t> signs{1, 1, 1};
    auto rs = r_set(d, signs, leaves, 1e-12);
    CHECK(rs.size() == 2);
    CHECK(std::abs(std::abs(rs[0] - rs[1]) - 3.0 / std::sqrt(221.0)) < 1e-12);

    // n = 2 never has bracketing freedom
    std::vector<Cx> two{{0.5, 0}, {0, 0.5}};
    std::vector<std::int8_t> s2{1, -1};
    CHECK(r_set(d, s2, two, 1e-12).size() == 1);
}

TEST_CASE("word strings round trip") {
    WordSpec w;
    w.signs = {1, 1, -1};
    w.leaves = {0, 1, 0};
    w.tree = enumerate_trees(3)[0]; // ((. .) .)
    auto s = word_to_string(w);
    CHECK(s == "((+0 ⊕ +1) ⊕ -0)");
    auto back = word_from_string(s);
    CHECK(back.signs == w.signs);
    CHECK(back.leaves == w.leaves);
    CHECK(word_to_string(back) == s);

    CHECK_THROWS_AS(word_from_string("(+0 +1)"), format_error);
    CHECK_THROWS_AS(word_from_string("+0 junk"), format_error);
    CHECK_THROWS_AS(word_from_string(""), format_error);
}

TEST_CASE("closure on tables reaches the exact fixed point") {
    auto z4 = cyclic_group_table(4);
    ClosureOptions opt;
    opt.max_word_len = 4;
    auto full = closure_generate(z4, {1}, opt);
    std::set<int> vals(full.elements.begin(), full.elements.end());
    CHECK(vals == std::set<int>{0, 1, 2, 3});

    auto half = closure_generate(z4, {2}, opt);
    std::set<int> vals2(half.elements.begin(), half.elements.end());
    CHECK(vals2 == std::set<int>{0, 2});
}

TEST_CASE("closure is monotone in the word-length cap") {
    MobiusDisk d;
    std::vector<Cx> gens{{0.5, 0}, {0, 0.5}};
    ClosureOptions a, b;
    a.max_word_len = 3;
    b.max_word_len = 4;
    a.dedup_tol = b.dedup_tol = 1e-6;
    auto ca = closure_generate(d, gens, a);
    auto cb = closure_generate(d, gens, b);
    CHECK(cb.size() >= ca.size());
    // the shorter closure is a prefix of the longer one: same BFS order
    for (std::size_t i = 0; i < ca.size(); ++i) CHECK(ca.elements[i] == cb.elements[i]);
}

TEST_CASE("real generators stay on the real diameter") {
    MobiusDisk d;
    ClosureOptions opt;
    opt.max_word_len = 4;
    opt.dedup_tol = 1e-9;
    auto c = closure_generate(d, {Cx{0.5, 0}}, opt);
    for (auto v : c.elements) CHECK(std::abs(v.imag()) <= 1e-14);
}

TEST_CASE("closure word provenance reconstructs evaluating words") {
    MobiusDisk d;
    std::vector<Cx> gens{{0.5, 0}, {0, 0.5}};
    ClosureOptions opt;
    opt.max_word_len = 5;
    opt.dedup_tol = 1e-4;
    auto c = closure_generate(d, gens, opt);
    auto rng = RngStream::derive(77, "prov");
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t i = rng.index(c.size());
        auto w = c.word_of(i);
        CHECK(w.length() == c.word_len[i]);
        CHECK(std::abs(eval_word(d, w, gens) - c.elements[i]) < 1e-13);
    }
}

TEST_CASE("budget exhaustion truncates, never silently completes") {
    MobiusDisk d;
    ClosureOptions opt;
    opt.max_word_len = 8;
    opt.dedup_tol = 1e-4;
    opt.max_elements = 500;
    auto c = closure_generate(d, {Cx{0.5, 0}, Cx{0, 0.5}}, opt);
    CHECK(c.truncated);
    CHECK(c.size() <= 500);
    CHECK(c.frontier_word_length < 8);
}

TEST_CASE("membership witnesses") {
    auto z4 = cyclic_group_table(4);
    // a generator is its own length-1 witness
    auto w1 = word_membership_witness(z4, 1, {1}, 4, 0.0);
    REQUIRE(w1.has_value());
    CHECK(w1->length() == 1);
    std::vector<int> gens{1};
    CHECK(eval_word(z4, *w1, gens) == 1);

    // the identity needs two leaves: s (+) (-s)
    auto w0 = word_membership_witness(z4, 0, {1}, 4, 0.0);
    REQUIRE(w0.has_value());
    CHECK(w0->length() == 2);
    CHECK(eval_word(z4, *w0, gens) == 0);

    // 3 = -1 is reachable at length 1 by a signed leaf
    auto w3 = word_membership_witness(z4, 3, {1}, 4, 0.0);
    REQUIRE(w3.has_value());
    CHECK(w3->length() == 1);
    CHECK(eval_word(z4, *w3, gens) == 3);

    // out of reach: 1 from the subcarrier generated by 2
    CHECK_FALSE(word_membership_witness(z4, 1, {2}, 6, 0.0).has_value());
}

TEST_CASE("continuous witnesses re-evaluate within tolerance") {
    MobiusDisk d;
    std::vector<Cx> gens{{0.5, 0}, {0, 0.5}};
    Cx target = d.add(gens[0], d.add(gens[1], -gens[0]));
    auto w = word_membership_witness(d, target, gens, 4, 1e-9);
    REQUIRE(w.has_value());
    CHECK(std::abs(eval_word(d, *w, gens) - target) <= 1e-9);
}
