#pragma once

#include <map>
#include <string>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

/* A root system in simple-root coordinates.  Roots are integer vectors over
 * the simple-root basis; positives come first and roots[n_pos + i] is the
 * negative of roots[i].  cartan[i][j] = <alpha_i, alpha_j^vee>.
 */
struct RootSystem {
    Family family;
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<int>> roots;
    int n_pos = 0;
    std::map<std::vector<int>, int> index;

    int num_roots() const { return static_cast<int>(roots.size()); }
    bool is_positive(int r) const { return r < n_pos; }
    int negate(int r) const { return r < n_pos ? r + n_pos : r - n_pos; }
    int root_index(const std::vector<int>& coords) const;

    // <roots[r], alpha_j^vee>
    int pair_with_coroot(int r, int j) const;
    // index of s_j(roots[r])
    int reflect(int r, int j) const;
};

std::vector<std::vector<int>> cartan_matrix(Family f, int rank);
RootSystem make_root_system(Family f, int rank);

// Cartan type of the subsystem spanned by a subset of simple roots, with
// components sorted, e.g. "A2+A1".  Empty subset gives "".
std::string subset_type(const RootSystem& rs, const std::vector<int>& X);

// All permutations of the simple roots preserving the Cartan matrix.
std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs);

} // namespace springer
