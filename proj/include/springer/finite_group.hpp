#pragma once

#include <string>
#include <vector>

namespace springer {

struct SubgroupView;

/* A finite group given by its multiplication table, elements 0..n-1 with 0
 * the identity.  Construction validates the group axioms.
 */
class FiniteGroup {
public:
    FiniteGroup() = default;
    static FiniteGroup from_table(std::vector<std::vector<int>> table);
    static FiniteGroup from_permutations(int degree,
                                         const std::vector<std::vector<int>>& generators);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n);
    static FiniteGroup alternating(int n);
    static FiniteGroup dihedral(int n); // order 2n
    static FiniteGroup quaternion8();
    static FiniteGroup klein_four();
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

    int size() const { return n_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int order_of(int a) const;
    int exponent() const;
    bool abelian() const;

    const std::vector<std::vector<int>>& table() const { return table_; }

    // subgroup machinery: elements are ambient indices
    std::vector<int> closure(std::vector<int> gens) const;
    std::vector<int> centralizer(int a) const;
    std::vector<int> commutator_subgroup() const;
    // all subgroups generated by at most max_gens elements (equals all
    // subgroups for the orders used here), sorted element lists
    std::vector<std::vector<int>> subgroups(int max_gens = 3) const;

    // the subgroup as its own FiniteGroup plus the index embedding
    SubgroupView subgroup_group(const std::vector<int>& elements) const;

    // group isomorphism test by multiplication-table search (small orders)
    bool isomorphic_to(const FiniteGroup& other) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
};

struct SubgroupView {
    FiniteGroup group;
    std::vector<int> elements; // sub index -> ambient index
};

// Conjugacy classes with minimal-index representatives, sorted by
// representative; classes[i][0] is the representative.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

} // namespace springer
