#include "gyrolab/words.hpp"

#include <cctype>

namespace gyrolab {

std::uint64_t catalan(int n) {
    if (n < 0 || n > 32) throw precondition_error("catalan: argument out of range [0,32]");
    // C(0) = 1, C(k+1) = sum_{i<=k} C(i) C(k-i)
    std::uint64_t c[33] = {1};
    for (int k = 0; k < n; ++k) {
        std::uint64_t s = 0;
        for (int i = 0; i <= k; ++i) s += c[i] * c[k - i];
        c[k + 1] = s;
    }
    return c[n];
}

namespace {

BracketTree leaf_tree() {
    BracketTree t;
    t.nodes.push_back({});
    t.root = 0;
    t.leaf_count = 1;
    t.index = 0;
    return t;
}

BracketTree join_nodes(const BracketTree& l, const BracketTree& r, std::uint64_t index) {
    BracketTree t;
    t.nodes = l.nodes;
    const auto off = static_cast<std::int32_t>(l.nodes.size());
    for (const auto& nd : r.nodes) {
        BracketTree::Node shifted = nd;
        if (!nd.is_leaf()) {
            shifted.left += off;
            shifted.right += off;
        }
        t.nodes.push_back(shifted);
    }
    t.nodes.push_back({l.root, r.root + off});
    t.root = static_cast<std::int32_t>(t.nodes.size()) - 1;
    t.leaf_count = l.leaf_count + r.leaf_count;
    t.index = index;
    return t;
}

} // namespace

std::vector<BracketTree> enumerate_trees(int leaves) {
    if (leaves < 1) throw precondition_error("enumerate_trees: need at least one leaf");
    if (leaves > 14)
        throw precondition_error("enumerate_trees: leaf count " + std::to_string(leaves) +
                                 " exceeds the enumeration bound of 14");
    std::vector<std::vector<BracketTree>> memo(static_cast<std::size_t>(leaves) + 1);
    memo[1] = {leaf_tree()};
    for (int n = 2; n <= leaves; ++n) {
        auto& out = memo[static_cast<std::size_t>(n)];
        out.reserve(catalan(n - 1));
        for (int ls = 1; ls < n; ++ls) {
            for (const auto& l : memo[static_cast<std::size_t>(ls)]) {
                for (const auto& r : memo[static_cast<std::size_t>(n - ls)]) {
                    out.push_back(join_nodes(l, r, out.size()));
                }
            }
        }
    }
    return std::move(memo[static_cast<std::size_t>(leaves)]);
}

BracketTree join_trees(const BracketTree& left, const BracketTree& right) {
    const int n = left.leaf_count + right.leaf_count;
    // Trees with the same total leaf count and a smaller left subtree come
    // first; within this split the left index is major.
    std::uint64_t offset = 0;
    for (int ls = 1; ls < left.leaf_count; ++ls)
        offset += catalan(ls - 1) * catalan(n - ls - 1);
    std::uint64_t index =
        offset + left.index * catalan(right.leaf_count - 1) + right.index;
    return join_nodes(left, right, index);
}

std::string word_to_string(const WordSpec& w) {
    if (w.signs.size() != w.leaves.size() ||
        static_cast<int>(w.signs.size()) != w.tree.leaf_count || w.tree.leaf_count < 1)
        throw precondition_error("word_to_string: malformed word");
    std::size_t next_leaf = 0;
    auto emit = [&](auto&& self, std::int32_t node) -> std::string {
        const auto& nd = w.tree.nodes[static_cast<std::size_t>(node)];
        if (nd.is_leaf()) {
            const std::size_t pos = next_leaf++;
            return (w.signs[pos] > 0 ? "+" : "-") + std::to_string(w.leaves[pos]);
        }
        return "(" + self(self, nd.left) + " ⊕ " + self(self, nd.right) + ")";
    };
    return emit(emit, w.tree.root);
}

namespace {

struct WordParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw format_error("word parse error at byte " + std::to_string(pos) + ": " + why);
    }

    bool consume(std::string_view tok) {
        if (s.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    WordSpec parse_expr() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s[pos] == '(') {
            ++pos;
            WordSpec l = parse_expr();
            skip_ws();
            // the operator is the circled plus; a bare '+' is a leaf sign
            if (!consume("⊕")) fail("expected ⊕ between sub-words");
            WordSpec r = parse_expr();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            WordSpec w;
            w.signs = l.signs;
            w.signs.insert(w.signs.end(), r.signs.begin(), r.signs.end());
            w.leaves = l.leaves;
            w.leaves.insert(w.leaves.end(), r.leaves.begin(), r.leaves.end());
            w.tree = join_trees(l.tree, r.tree);
            return w;
        }
        std::int8_t sign = 0;
        if (consume("+"))
            sign = 1;
        else if (consume("-") || consume("−"))
            sign = -1;
        else
            fail("expected '(', '+' or '-'");
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a leaf index");
        std::size_t leaf = 0;
        for (std::size_t i = start; i < pos; ++i)
            leaf = leaf * 10 + static_cast<std::size_t>(s[i] - '0');
        WordSpec w;
        w.signs = {sign};
        w.leaves = {leaf};
        w.tree = leaf_tree();
        return w;
    }
};

} // namespace

WordSpec word_from_string(std::string_view s) {
    WordParser p{s};
    WordSpec w = p.parse_expr();
    p.skip_ws();
    if (p.pos != s.size()) p.fail("trailing input");
    return w;
}

} // namespace gyrolab
