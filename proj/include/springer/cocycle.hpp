#pragma once

#include <vector>

#include "springer/finite_group.hpp"

namespace springer {

/* A normalized 2-cocycle with values in the m-th roots of unity, stored as
 * exponents mod m: kappa(g,h) is the exponent table entry at(g,h).
 */
struct Cocycle {
    int modulus = 1;
    std::vector<std::vector<int>> table; // n x n exponents

    static Cocycle trivial(int group_size, int modulus = 1);

    int at(int g, int h) const { return table[g][h]; }
    int size() const { return static_cast<int>(table.size()); }
};

// cocycle identity k(g,h)+k(gh,x) = k(g,hx)+k(h,x) plus normalization
bool validate_cocycle(const FiniteGroup& g, const Cocycle& k);

// kappa'(g,h) = kappa(g,h) + eta(g) + eta(h) - eta(gh); eta(0) must be 0
Cocycle coboundary_twist(const FiniteGroup& g, const Cocycle& k,
                         const std::vector<int>& eta);

// the cup product of two characters f, h : G -> Z/m, always a cocycle
Cocycle cup_product_cocycle(const FiniteGroup& g, const std::vector<int>& f,
                            const std::vector<int>& h, int modulus);

// classes of elements x with kappa(x,y) = kappa(y,x) for all y centralizing
// x; their count equals the number of irreducible kappa-twisted modules
std::vector<int> kappa_regular_classes(const FiniteGroup& g, const Cocycle& k);

// all homomorphisms G -> Z/m as exponent vectors (characters of G^ab)
std::vector<std::vector<int>> homs_to_cyclic(const FiniteGroup& g, int m);

} // namespace springer
