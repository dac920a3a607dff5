#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "ecs/scalar.hpp"

namespace rext {

// Weakly decreasing sequence of positive integers. Zero parts passed to the
// constructor are dropped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    // λ_i for 1-based i; zero beyond the length.
    int part(int i) const;
    // Conjugate (transposed) partition.
    Partition conjugate() const;

    std::string to_string() const;  // "(5,5,4,2,2)", "()" for the empty partition

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Finite set of integers, enumerated increasingly.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> ks) : elements_(ks) {}
    explicit IndexSet(std::set<int> ks) : elements_(std::move(ks)) {}

    const std::set<int>& elements() const { return elements_; }
    std::vector<int> increasing() const { return {elements_.begin(), elements_.end()}; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool empty() const { return elements_.empty(); }
    bool contains(int k) const { return elements_.count(k) != 0; }
    IndexSet translated(int n) const;

    std::string to_string() const;  // "{0,1,6,7}"

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::set<int> elements_;
};

IndexSet symmetric_difference(const IndexSet& a, const IndexSet& b);
IndexSet intersection(const IndexSet& a, const IndexSet& b);

// Subset of Z containing all sufficiently negative integers and finitely many
// non-negative ones. Stored as its two finite deviations from M_0 = {m < 0}.
class MayaDiagram {
public:
    MayaDiagram() = default;  // the trivial diagram M_0
    MayaDiagram(std::set<int> filled_nonneg, std::set<int> empty_neg);

    // f_K(M_0)
    static MayaDiagram from_index_set(const IndexSet& k);

    const std::set<int>& filled_nonneg() const { return filled_nonneg_; }
    const std::set<int>& empty_neg() const { return empty_neg_; }

    bool contains(int m) const;
    int index() const;  // σ_M

    // Index set K = M ⊖ M_0.
    IndexSet index_set() const;

    // Smallest non-member and largest member; every m below the first is a
    // member and every m above the second is not.
    int smallest_nonmember() const;
    int largest_member() const;

    // Members m >= lo in decreasing order.
    std::vector<int> members_from(int lo) const;

    std::string to_string() const;  // "{...,-2,-1,2,3}"

    friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;

private:
    std::set<int> filled_nonneg_, empty_neg_;
};

MayaDiagram maya_from_partition(const Partition& lambda);
Partition partition_from_maya(const MayaDiagram& m);
MayaDiagram translate(const MayaDiagram& m, int n);
MayaDiagram flip(const MayaDiagram& m, int k);
MayaDiagram multi_flip(const MayaDiagram& m, const IndexSet& k);
IndexSet symmetric_difference(const MayaDiagram& a, const MayaDiagram& b);

// hooks[i-1][j-1] = hk_λ(i,j); row i has λ_i entries.
std::vector<std::vector<int>> hooklengths(const Partition& lambda);

// Number of standard Young tableaux, N! / Π hooklengths.
BigInt dim_tableaux(const Partition& lambda);

// λ_1 + ℓ.
int threshold_critical_degree(const Partition& lambda);

// q-core test M ⊂ M + q.
bool is_critical_degree(const MayaDiagram& m, int q);

// D_λ ∩ [1, q_max].
std::vector<int> critical_degrees(const Partition& lambda, int q_max);

struct Insertion {
    int sign;
    Partition partition;
};

// m ▷ λ with the sign (-1)^#{k ∈ M_λ : k > m}. Throws std::domain_error when
// m ∈ M_λ.
Insertion insertion(int m, const Partition& lambda);

// First `count` elements of I_M = Z \ M, increasing.
std::vector<int> bound_state_indices(const MayaDiagram& m, int count);

// Every finite block of consecutive members has even length.
bool is_krein_adler_regular(const MayaDiagram& m);

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace rext
