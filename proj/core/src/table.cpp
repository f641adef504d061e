#include "gyrolab/table.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "gyrolab/io.hpp"

namespace gyrolab {

namespace {

std::vector<std::vector<std::vector<int>>> identity_gyrations(int n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> row(static_cast<std::size_t>(n), id);
    return std::vector<std::vector<std::vector<int>>>(static_cast<std::size_t>(n), row);
}

} // namespace

TableGyro::TableGyro(std::vector<std::vector<int>> add,
                     std::vector<std::vector<std::vector<int>>> gyr)
    : add_(std::move(add)), gyr_(std::move(gyr)) {
    n_ = static_cast<int>(add_.size());
    if (n_ < 1) throw format_error("table: empty addition table");
    for (const auto& row : add_) {
        if (static_cast<int>(row.size()) != n_)
            throw format_error("table: addition table is not square");
        for (int v : row)
            if (v < 0 || v >= n_)
                throw format_error("table: addition entry " + std::to_string(v) +
                                   " out of range");
    }
    if (static_cast<int>(gyr_.size()) != n_)
        throw format_error("table: gyration table has wrong first dimension");
    for (const auto& row : gyr_) {
        if (static_cast<int>(row.size()) != n_)
            throw format_error("table: gyration table has wrong second dimension");
        for (const auto& perm : row) {
            if (static_cast<int>(perm.size()) != n_)
                throw format_error("table: gyration entry is not length-n");
            for (int v : perm)
                if (v < 0 || v >= n_)
                    throw format_error("table: gyration value " + std::to_string(v) +
                                       " out of range");
        }
    }
    // Two-sided inverse per element; -1 when none exists (validate() reports).
    inv_.assign(static_cast<std::size_t>(n_), -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (add_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0 &&
                add_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] == 0) {
                inv_[static_cast<std::size_t>(a)] = b;
                break;
            }
    group_induced_ = true;
    for (int a = 0; a < n_ && group_induced_; ++a)
        for (int b = 0; b < n_ && group_induced_; ++b)
            for (int z = 0; z < n_; ++z)
                if (gyr_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                        [static_cast<std::size_t>(z)] != z) {
                    group_induced_ = false;
                    break;
                }
}

TableGyro TableGyro::group_induced(std::vector<std::vector<int>> add) {
    const int n = static_cast<int>(add.size());
    if (n < 1) throw format_error("table: empty addition table");
    return TableGyro(std::move(add), identity_gyrations(n));
}

TableGyro TableGyro::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("table JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("order") || !j.contains("add"))
            throw format_error("table JSON: need object with 'order' and 'add'");
        const int n = j.at("order").get<int>();
        auto add = j.at("add").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(add.size()) != n)
            throw format_error("table JSON: 'add' does not match 'order'");
        if (!j.contains("gyr")) return TableGyro::group_induced(std::move(add));
        auto gyr = j.at("gyr").get<std::vector<std::vector<std::vector<int>>>>();
        return TableGyro(std::move(add), std::move(gyr));
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("table JSON: ") + e.what());
    }
}

TableGyro TableGyro::load(const std::string& path) {
    return from_json_text(read_text_file(path));
}

std::string TableGyro::to_json_text() const {
    nlohmann::json j;
    j["order"] = n_;
    j["add"] = add_;
    if (!group_induced_) j["gyr"] = gyr_;
    return j.dump(2);
}

namespace {

struct ExactEntry {
    const char* axiom;
    bool failed;
    std::vector<std::string> witness;
    std::size_t tuples;
};

AxiomResidual make_entry(const ExactEntry& e) {
    return {e.axiom, e.failed ? 1.0 : 0.0, 0.0, e.witness, e.tuples, 0};
}

} // namespace

AxiomReport TableGyro::validate() const {
    const std::size_t n = static_cast<std::size_t>(n_);
    AxiomReport rep;
    rep.carrier = name();

    ExactEntry identity{"identity_element", false, {}, 2 * n};
    for (std::size_t a = 0; a < n && !identity.failed; ++a) {
        if (add_[0][a] != static_cast<int>(a) || add_[a][0] != static_cast<int>(a)) {
            identity.failed = true;
            identity.witness = {std::to_string(a)};
        }
    }
    rep.entries.push_back(make_entry(identity));

    ExactEntry inverse{"unique_two_sided_inverse", false, {}, n};
    for (std::size_t a = 0; a < n && !inverse.failed; ++a) {
        int count = 0;
        for (std::size_t b = 0; b < n; ++b)
            if (add_[a][b] == 0 && add_[b][a] == 0) ++count;
        if (count != 1) {
            inverse.failed = true;
            inverse.witness = {std::to_string(a)};
        }
    }
    rep.entries.push_back(make_entry(inverse));

    ExactEntry perm{"gyration_permutation", false, {}, n * n};
    for (std::size_t a = 0; a < n && !perm.failed; ++a)
        for (std::size_t b = 0; b < n && !perm.failed; ++b) {
            std::vector<bool> hit(n, false);
            for (std::size_t z = 0; z < n; ++z) {
                int v = gyr_[a][b][z];
                if (hit[static_cast<std::size_t>(v)]) {
                    perm.failed = true;
                    perm.witness = {std::to_string(a), std::to_string(b)};
                    break;
                }
                hit[static_cast<std::size_t>(v)] = true;
            }
        }
    rep.entries.push_back(make_entry(perm));

    ExactEntry autom{"gyr_automorphism", false, {}, n * n * n * n};
    for (std::size_t a = 0; a < n && !autom.failed; ++a)
        for (std::size_t b = 0; b < n && !autom.failed; ++b)
            for (std::size_t x = 0; x < n && !autom.failed; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    const auto& p = gyr_[a][b];
                    int lhs = p[static_cast<std::size_t>(add_[x][y])];
                    int rhs = add_[static_cast<std::size_t>(p[x])]
                                  [static_cast<std::size_t>(p[y])];
                    if (lhs != rhs) {
                        autom.failed = true;
                        autom.witness = {std::to_string(a), std::to_string(b),
                                         std::to_string(x), std::to_string(y)};
                        break;
                    }
                }
    rep.entries.push_back(make_entry(autom));

    ExactEntry assoc{"gyroassociativity", false, {}, n * n * n};
    for (std::size_t x = 0; x < n && !assoc.failed; ++x)
        for (std::size_t y = 0; y < n && !assoc.failed; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                int lhs = add_[x][static_cast<std::size_t>(add_[y][z])];
                int rhs = add_[static_cast<std::size_t>(add_[x][y])]
                              [static_cast<std::size_t>(gyr_[x][y][z])];
                if (lhs != rhs) {
                    assoc.failed = true;
                    assoc.witness = {std::to_string(x), std::to_string(y),
                                     std::to_string(z)};
                    break;
                }
            }
    rep.entries.push_back(make_entry(assoc));

    ExactEntry loop{"left_loop", false, {}, n * n};
    for (std::size_t x = 0; x < n && !loop.failed; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (gyr_[static_cast<std::size_t>(add_[x][y])][y] != gyr_[x][y]) {
                loop.failed = true;
                loop.witness = {std::to_string(x), std::to_string(y)};
                break;
            }
        }
    rep.entries.push_back(make_entry(loop));

    return rep;
}

std::vector<int> TableGyro::closure(const std::vector<int>& seeds) const {
    std::vector<bool> in(static_cast<std::size_t>(n_), false);
    std::vector<int> members;
    auto push = [&](int v) {
        if (!in[static_cast<std::size_t>(v)]) {
            in[static_cast<std::size_t>(v)] = true;
            members.push_back(v);
        }
    };
    push(0);
    for (int s : seeds) {
        check_index(s);
        push(s);
    }
    // iterate to a fixed point under (+), inversion, and internal gyrations
    std::size_t stable = 0;
    while (stable != members.size()) {
        stable = members.size();
        const std::vector<int> snapshot = members;
        for (int a : snapshot) {
            if (inv_[static_cast<std::size_t>(a)] < 0)
                throw domain_error("table: element " + std::to_string(a) +
                                   " has no two-sided inverse");
            push(inv_[static_cast<std::size_t>(a)]);
            for (int b : snapshot) {
                push(add_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
                for (int z : snapshot)
                    push(gyr_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                             [static_cast<std::size_t>(z)]);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

namespace {

void require_subgyrogroup(const TableGyro& t, const std::vector<int>& H, const char* op) {
    if (H.empty())
        throw precondition_error(std::string(op) + ": subset is empty");
    std::set<int> h(H.begin(), H.end());
    if (h.size() != H.size())
        throw precondition_error(std::string(op) + ": subset has duplicate members");
    for (int a : H)
        for (int b : H) {
            if (!h.count(t.add(a, b)))
                throw precondition_error(std::string(op) + ": subset not closed under +, witness (" +
                                         std::to_string(a) + "," + std::to_string(b) + ")");
            for (int x : H)
                if (!h.count(t.gyr(a, b, x)))
                    throw precondition_error(
                        std::string(op) + ": subset not closed under internal gyrations, witness (" +
                        std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(x) + ")");
        }
    for (int a : H)
        if (!h.count(t.inv(a)))
            throw precondition_error(std::string(op) + ": subset not closed under inverses, witness " +
                                     std::to_string(a));
}

} // namespace

bool TableGyro::lsub_check(const std::vector<int>& H) const {
    require_subgyrogroup(*this, H, "lsub_check");
    std::set<int> h(H.begin(), H.end());
    for (int a = 0; a < n_; ++a)
        for (int hh : H)
            for (int x : H)
                if (!h.count(gyr(a, hh, x))) return false;
    return true;
}

std::vector<int> TableGyro::coset_of(int g, const std::vector<int>& H) const {
    std::vector<int> c;
    c.reserve(H.size());
    for (int h : H) c.push_back(add(g, h));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

TableGyro::CosetPartition TableGyro::coset_decompose(const std::vector<int>& H) const {
    require_subgyrogroup(*this, H, "coset_decompose");
    CosetPartition part;
    std::vector<int> owner(static_cast<std::size_t>(n_), -1);
    for (int g = 0; g < n_; ++g) {
        auto c = coset_of(g, H);
        int block = owner[static_cast<std::size_t>(g)];
        if (block < 0) {
            for (int m : c) {
                if (owner[static_cast<std::size_t>(m)] >= 0) {
                    part.valid = false;
                    part.diagnostic =
                        "cosets of " + std::to_string(g) + " and " +
                        std::to_string(
                            part.representatives[static_cast<std::size_t>(
                                owner[static_cast<std::size_t>(m)])]) +
                        " overlap at " + std::to_string(m);
                    return part;
                }
            }
            block = static_cast<int>(part.blocks.size());
            part.blocks.push_back(c);
            part.representatives.push_back(g); // g is minimal: smaller ones are owned
            for (int m : c) owner[static_cast<std::size_t>(m)] = block;
        } else if (part.blocks[static_cast<std::size_t>(block)] != c) {
            part.valid = false;
            part.diagnostic = "coset of " + std::to_string(g) +
                              " differs from the block of its representative " +
                              std::to_string(part.representatives[static_cast<std::size_t>(block)]);
            return part;
        }
    }
    part.valid = true;
    return part;
}

TableGyro cyclic_group_table(int n) {
    if (n < 1) throw precondition_error("cyclic_group_table: order must be >= 1");
    std::vector<std::vector<int>> add(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    return TableGyro::group_induced(std::move(add));
}

TableGyro klein_four_table() {
    std::vector<std::vector<int>> add(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i ^ j;
    return TableGyro::group_induced(std::move(add));
}

} // namespace gyrolab
