#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gyrolab/errors.hpp"
#include "gyrolab/report.hpp"
#include "gyrolab/rng.hpp"

namespace gyrolab {

/// Finite gyrogroup given by an addition table and a gyration-permutation
/// table. Element 0 is the identity by convention. Equality is exact and the
/// ambient metric is the 0/1 discrete metric.
class TableGyro {
public:
    using element_type = int;

    static constexpr bool exact_carrier = true;
    static constexpr bool has_ball_sampling = false;
    static constexpr bool norm_preserving_gyr = false;

    /// add[i][j] = i (+) j; gyr[i][j] a permutation of [0,n). Dimension
    /// errors throw format_error; axiom violations are left to validate().
    TableGyro(std::vector<std::vector<int>> add,
              std::vector<std::vector<std::vector<int>>> gyr);

    /// Group table with identity gyrations.
    static TableGyro group_induced(std::vector<std::vector<int>> add);

    /// Parses {"order": n, "add": [[int]], "gyr": [[[int]]]}; a missing "gyr"
    /// defaults to identity permutations (group-induced).
    static TableGyro from_json_text(const std::string& text);
    static TableGyro load(const std::string& path);
    std::string to_json_text() const;

    int order() const { return n_; }
    bool group_induced_gyr() const { return group_induced_; }

    element_type identity() const { return 0; }
    element_type add(element_type a, element_type b) const {
        check_index(a);
        check_index(b);
        return add_[a][b];
    }
    element_type inv(element_type a) const {
        check_index(a);
        return inv_[a];
    }
    element_type gyr(element_type a, element_type b, element_type z) const {
        check_index(a);
        check_index(b);
        check_index(z);
        return gyr_[a][b][z];
    }
    double dist(element_type a, element_type b) const { return a == b ? 0.0 : 1.0; }
    double norm(element_type a) const { return dist(0, a); }
    bool eq(element_type a, element_type b, double) const { return a == b; }
    element_type sample(RngStream& rng) const {
        return static_cast<element_type>(rng.index(static_cast<std::size_t>(n_)));
    }
    std::string name() const { return group_induced_ ? "group" : "table"; }
    std::string format(element_type a) const { return std::to_string(a); }

    /// Exhaustive axiom verification: identity row/column, unique two-sided
    /// inverses, gyration permutations, the automorphism property, left
    /// gyroassociativity and the left loop property, each over all tuples.
    /// Residuals are 0/1 per axiom with the first failing tuple as witness.
    AxiomReport validate() const;

    /// Exact closure of a subset under (+), inversion, and all gyrations
    /// gyr[x,y] with x,y drawn from the growing set. Always contains 0.
    std::vector<int> closure(const std::vector<int>& seeds) const;

    /// True when the closure of H equals H and gyr[a][h] maps H onto H for
    /// every a in the carrier and h in H. Throws precondition_error naming
    /// the violated closure when H is not a subgyrogroup at all.
    bool lsub_check(const std::vector<int>& H) const;

    struct CosetPartition {
        std::vector<std::vector<int>> blocks; // pairwise disjoint, union = carrier
        std::vector<int> representatives;     // one per block; 0 represents 0's coset
        bool valid = false;                   // false when two cosets overlap
        std::string diagnostic;               // names the overlapping cosets
    };

    /// Left cosets {g (+) H}. Requires lsub_check(H); if translates overlap
    /// anyway the result carries a diagnostic instead of a partition.
    CosetPartition coset_decompose(const std::vector<int>& H) const;

private:
    void check_index(int a) const {
        if (a < 0 || a >= n_)
            throw domain_error("table: index " + std::to_string(a) +
                               " out of range [0," + std::to_string(n_) + ")");
    }
    std::vector<int> coset_of(int g, const std::vector<int>& H) const;

    int n_ = 0;
    std::vector<std::vector<int>> add_;
    std::vector<std::vector<std::vector<int>>> gyr_;
    std::vector<int> inv_;
    bool group_induced_ = false;
};

/// Standard small fixtures used across tests and docs.
TableGyro cyclic_group_table(int n);
TableGyro klein_four_table();

} // namespace gyrolab
