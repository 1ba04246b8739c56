#pragma once

#include <bitset>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "springer/root_system.hpp"

namespace springer {

// Enough for every enumerable system here (E8, with 240 roots, is out of
// range for element enumeration anyway).
using RootSet = std::bitset<256>;

/* Extended Weyl group W = W' x| pi0 of a (possibly disconnected) group.
 * Elements are stored by their action on the full root list together with
 * the pi0 component; the length of (w, theta) is the length of w.
 */
struct ExtElement {
    std::vector<int16_t> perm; // action on root indices
    int theta = 0;             // index into pi0 element list
};

class ExtendedWeylGroup {
public:
    enum class Pi0 { Trivial, Flip, Triality, Full };

    ExtendedWeylGroup(Family f, int rank, Pi0 spec = Pi0::Trivial);
    ExtendedWeylGroup(Family f, int rank, std::vector<std::vector<int>> pi0_generators);

    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.rank; }

    // pi0 as permutations of the simple roots; index 0 is the identity
    const std::vector<std::vector<int>>& pi0() const { return pi0_; }
    int pi0_mul(int a, int b) const { return pi0_mult_[a][b]; }
    int pi0_inv(int a) const { return pi0_inv_[a]; }
    int pi0_size() const { return static_cast<int>(pi0_.size()); }
    // image of simple root j under pi0 element t
    int pi0_apply(int t, int j) const { return pi0_[t][j]; }

    // identity and generators as extended elements
    ExtElement identity() const;
    ExtElement simple_reflection(int i) const;
    ExtElement pi0_element(int t) const;

    ExtElement multiply(const ExtElement& a, const ExtElement& b) const;
    ExtElement inverse(const ExtElement& a) const;
    int length(const ExtElement& a) const;
    int apply(const ExtElement& a, int root) const { return a.perm[root]; }
    RootSet apply(const ExtElement& a, const RootSet& s) const;

    // full enumeration of W' (connected Weyl group); throws above the cap
    const std::vector<ExtElement>& weyl_elements() const;
    long long weyl_order() const; // |W'| by formula, no enumeration
    void set_enumeration_cap(long long cap) { cap_ = cap; }

    // all of W = W' x| pi0, deterministically ordered (theta major)
    std::vector<ExtElement> all_elements() const;

    // subgroup generated by the simple reflections in X and the pi0
    // elements listed in omega, as extended elements
    std::vector<ExtElement> subgroup(const std::vector<int>& X,
                                     const std::vector<int>& omega = {}) const;

    // roots lying in the span of X (both signs)
    RootSet levi_roots(const std::vector<int>& X) const;
    // positive roots together with the negatives in the span of X
    RootSet parabolic_roots(const std::vector<int>& X) const;

    // Cached enumeration of W = W' x| pi0 with per-generator multiplication
    // tables.  Generator slots: 0..rank-1 simple reflections, then the pi0
    // elements.
    struct Atlas {
        std::vector<ExtElement> weyl;  // W' only
        std::vector<ExtElement> elems; // all of W, theta major
        std::map<std::pair<std::vector<int16_t>, int>, int> index;
        std::vector<int> length;
        std::vector<std::vector<int>> lmul, rmul;
    };
    const Atlas& atlas() const;

private:
    void init_pi0(std::vector<std::vector<int>> gens);

    RootSystem rs_;
    std::vector<std::vector<int>> pi0_;
    std::vector<std::vector<int>> pi0_mult_;
    std::vector<int> pi0_inv_;
    std::vector<std::vector<int16_t>> pi0_root_perm_;
    std::vector<std::vector<int16_t>> simple_refl_;
    long long cap_ = 300000;
    mutable std::mutex atlas_mutex_;
    mutable std::unique_ptr<Atlas> atlas_;
};

struct ParabolicPair {
    std::vector<int> X;     // simple-root subset, sorted
    std::vector<int> omega; // pi0 element indices, sorted, containing 0

    bool operator==(const ParabolicPair& o) const { return X == o.X && omega == o.omega; }
    bool operator<(const ParabolicPair& o) const
    {
        return X != o.X ? X < o.X : omega < o.omega;
    }
};

struct LeviLabel {
    std::vector<int> X;
    std::vector<int> omega;
    std::string semisimple_type;

    bool operator==(const LeviLabel& o) const { return X == o.X && omega == o.omega; }
};

// All pairs (X, Omega) with Omega a subgroup of the setwise stabilizer of X
// in pi0, ordered by (X, Omega).
std::vector<ParabolicPair> enumerate_parabolic_pairs(const ExtendedWeylGroup& g);

// pi0-conjugacy classes of pairs, each class listing indices into the
// enumerate_parabolic_pairs output, minimal representative first.
std::vector<std::vector<int>> parabolic_pair_classes(const ExtendedWeylGroup& g);

// The quasi-Levi attached to X: omega is the kernel of the pi0-action on
// the coweight sublattice annihilated by X, i.e. the pi0 elements fixing
// the complement of X pointwise.
LeviLabel quasi_levi(const ExtendedWeylGroup& g, const std::vector<int>& X);

// Minimal-length representatives of W_{X_M} \ W / W_{X_L} over the full
// extended group, in nondecreasing order of dim_QwP.
std::vector<ExtElement> double_cosets(const ExtendedWeylGroup& g,
                                      const std::vector<int>& X_M,
                                      const std::vector<int>& X_L);

// Sizes of the cosets, matching double_cosets order.
std::vector<long long> double_coset_sizes(const ExtendedWeylGroup& g,
                                          const std::vector<int>& X_M,
                                          const std::vector<int>& X_L);

// dim Q w P = rank + |Phi_Q| + |Phi_P| - |Phi_Q ^ w Phi_P| on the root set,
// where Phi_P is the parabolic root set of X_L and Phi_Q that of X_M.
long long dim_QwP(const ExtendedWeylGroup& g, const std::vector<int>& X_M,
                  const ExtElement& w, const std::vector<int>& X_L);

/* One summand of the Mackey decomposition res_Q ind_P over a double coset
 * representative w: the common Levi M ^ wL, the parabolic M ^ wP of M, and
 * the parabolic Q ^ wL of wL, all as root index sets, together with the
 * pi0 elements of Omega_M that transport into Omega_L.
 */
struct MackeyTerm {
    ExtElement w;
    std::vector<int> levi_roots;      // Phi_M ^ w Phi_L
    std::vector<int> parabolic_in_M;  // Phi_M ^ w Phi_P
    std::vector<int> parabolic_in_wL; // Phi_Q ^ w Phi_L
    std::vector<int> omega;           // pi0 indices
};

std::vector<MackeyTerm> mackey_terms(const ExtendedWeylGroup& g,
                                     const ParabolicPair& Q,
                                     const ParabolicPair& P);

// Are X and X' conjugate under the connected Weyl group?
bool subsets_weyl_conjugate(const ExtendedWeylGroup& g, const std::vector<int>& X,
                            const std::vector<int>& Xp);

// W'-conjugacy classes of simple-root subsets (classes of standard Levis).
std::vector<std::vector<std::vector<int>>> levi_subset_classes(const ExtendedWeylGroup& g);

} // namespace springer
