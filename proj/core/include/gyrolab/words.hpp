#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gyrolab/carrier.hpp"
#include "gyrolab/errors.hpp"

namespace gyrolab {

/// Full binary tree with ordered leaves: one way of bracketing a signed sum.
/// Trees with n leaves are enumerated in a fixed canonical order — primarily
/// by the size of the left subtree, then recursively by the left and right
/// subtree order — and `index` is the position within that enumeration. The
/// enumeration is a bijection onto full binary trees, so there are exactly
/// catalan(n-1) trees with n leaves.
struct BracketTree {
    struct Node {
        std::int32_t left = -1;
        std::int32_t right = -1;
        bool is_leaf() const { return left < 0; }
    };
    std::vector<Node> nodes;
    std::int32_t root = -1;
    int leaf_count = 0;
    std::uint64_t index = 0;
};

std::uint64_t catalan(int n); // n <= 32

/// All bracketings of an n-leaf sum in canonical order. n in [1, 14].
std::vector<BracketTree> enumerate_trees(int leaves);

/// The canonical tree formed by joining `left` and `right` under a new root;
/// its index is computed within the enumeration for the combined leaf count.
BracketTree join_trees(const BracketTree& left, const BracketTree& right);

/// A signed bracketed word: leaf i contributes assignment[leaves[i]] when
/// signs[i] = +1 and its inverse when signs[i] = -1, folded through `tree`.
struct WordSpec {
    std::vector<std::int8_t> signs;
    std::vector<std::size_t> leaves;
    BracketTree tree;

    int length() const { return static_cast<int>(signs.size()); }
};

/// Parenthesized form with signed leaf indices, e.g. "((+0 ⊕ +1) ⊕ -0)".
std::string word_to_string(const WordSpec& w);

/// Inverse of word_to_string; throws format_error on malformed input.
WordSpec word_from_string(std::string_view s);

template <GyroCarrier G>
typename G::element_type eval_word(const G& g, const WordSpec& w,
                                   std::span<const typename G::element_type> assignment) {
    if (w.signs.size() != w.leaves.size() ||
        static_cast<int>(w.signs.size()) != w.tree.leaf_count)
        throw precondition_error("eval_word: sign/leaf/tree arity mismatch");
    if (w.tree.leaf_count < 1) throw precondition_error("eval_word: empty word");
    for (std::size_t ref : w.leaves)
        if (ref >= assignment.size())
            throw precondition_error("eval_word: leaf reference " + std::to_string(ref) +
                                     " outside the assignment");
    std::size_t next_leaf = 0;
    auto fold = [&](auto&& self, std::int32_t node) -> typename G::element_type {
        const auto& nd = w.tree.nodes[static_cast<std::size_t>(node)];
        if (nd.is_leaf()) {
            const std::size_t pos = next_leaf++;
            const auto& x = assignment[w.leaves[pos]];
            return w.signs[pos] > 0 ? x : g.inv(x);
        }
        auto l = self(self, nd.left);
        auto r = self(self, nd.right);
        return g.add(l, r);
    };
    return fold(fold, w.tree.root);
}

/// Values of every bracketing of the signed sum over the given leaves,
/// deduplicated at `dedup_tol` (exactly for exact carriers). Group-induced
/// carriers always produce a singleton.
template <GyroCarrier G>
std::vector<typename G::element_type> r_set(const G& g, std::span<const std::int8_t> signs,
                                            std::span<const typename G::element_type> assignment,
                                            double dedup_tol) {
    if (signs.size() != assignment.size() || signs.empty())
        throw precondition_error("r_set: need one sign per assigned leaf");
    const int n = static_cast<int>(signs.size());
    WordSpec w;
    w.signs.assign(signs.begin(), signs.end());
    w.leaves.resize(signs.size());
    for (std::size_t i = 0; i < w.leaves.size(); ++i) w.leaves[i] = i;
    std::vector<typename G::element_type> out;
    for (const auto& tree : enumerate_trees(n)) {
        w.tree = tree;
        auto v = eval_word(g, w, assignment);
        bool dup = false;
        for (const auto& u : out)
            if (g.eq(u, v, G::exact_carrier ? 0.0 : dedup_tol)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(v);
    }
    return out;
}

} // namespace gyrolab
