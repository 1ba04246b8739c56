#pragma once

#include <string>
#include <vector>

#include "springer/orbits.hpp"

namespace springer {

/* Label for a cuspidal local system on a nilpotent orbit.
 *
 *   CyclicCharacter   type A: character of Z/modulus with the given
 *                     exponent; cuspidal ones have exact order = modulus.
 *   CentralCharacter  a system pinned down by its central character alone.
 *   DimTagged         types B/D, triangular case: carries the dimension
 *                     2^floor((a-1)/2) together with the central character.
 *   SignTimesCentral  exceptional groups: sign character of the symmetric
 *                     group times a central character.
 */
struct LocalSystemLabel {
    enum class Kind { CyclicCharacter, CentralCharacter, DimTagged, SignTimesCentral };

    OrbitLabel orbit;
    Kind kind = Kind::CentralCharacter;
    long long modulus = 0;  // CyclicCharacter / SignTimesCentral center order
    long long exponent = 0; // character exponent mod modulus
    std::string central;    // central character label
    long long dim = 0;      // DimTagged only

    std::string to_string() const;
};

struct CuspidalSystems {
    std::vector<LocalSystemLabel> systems;
    std::vector<std::string> warnings;
};

// The cuspidal local systems of the simply-connected group g:
//   A_n: phi(n+1) characters of exact order n+1 on the regular orbit.
//   B_n: one system when 2n+1 is a square, one when it is triangular.
//   C_n: one system when n is triangular.
//   D_n: one system when 2n is a square, two when it is triangular;
//        when both hold the union (three systems) is emitted along with a
//        warning, since the narrative count of two conflicts with the
//        per-case rules.
//   exceptional: one system (two for E6) on the stored cuspidal orbit.
CuspidalSystems cuspidal_systems(const GroupLabel& g);

bool has_cuspidal(const GroupLabel& g);

// Shape of a standard Levi subgroup of a classical group: GL factors (a
// nonincreasing multiset) and a same-family core of the given rank.
struct LeviShape {
    Family family;
    std::vector<int> gl_sizes;
    int core_rank = 0;

    std::string to_string() const;
};

// A Levi shape together with one cuspidal system per factor.
struct CuspidalDatum {
    LeviShape levi;
    std::vector<LocalSystemLabel> factor_systems; // GL factors first, core last
};

// All cuspidal data on standard Levi shapes of a classical group, up to
// reordering of the GL factors.  GL_a factors follow the type-A rule
// (phi(a) systems on the regular orbit); the core follows its family rule.
std::vector<CuspidalDatum> cuspidal_levi_data(const GroupLabel& g);

// An irreducible representation of A(O) for an exceptional orbit, labeled
// by a character of the central factor and a partition indexing the
// symmetric-group factor (empty when A(O) has no symmetric factor).
struct Enhancement {
    std::string orbit;
    int central_exponent = 0;
    Partition sym_label;
};

bool is_sign_label(const Partition& sym_label, int k);

// All (orbit, enhancement) pairs of an exceptional group.
std::vector<Enhancement> enumerate_enhancements(const GroupLabel& g);

struct CuspidalSupport {
    bool self = false;           // the pair is cuspidal; support is itself
    std::string levi;            // "G", "T", or the semisimple type of the stored Levi
    std::vector<int> levi_roots; // simple-root subset of the stored Levi
    std::string orbit;           // orbit name on the Levi
    std::string system;
    int central_exponent = 0;

    bool operator==(const CuspidalSupport& o) const
    {
        return self == o.self && levi == o.levi && levi_roots == o.levi_roots &&
               orbit == o.orbit && system == o.system &&
               central_exponent == o.central_exponent;
    }
};

// Cuspidal support of an exceptional (orbit, enhancement) pair:
//   cuspidal pairs map to themselves;
//   G2/F4/E8, and central character 1 in E6/E7: principal series [T, 0, triv];
//   E6/E7 with nontrivial central character: the stored Levi (2A2 resp.
//   3A1), regular orbit, unique cuspidal system with the same character.
CuspidalSupport cuspidal_support_exceptional(const GroupLabel& g, const Enhancement& e);

// Order of the center image in A(O)'s of g (1, 2 or 3).
int exceptional_center_order(Family f);

// Twist an enhancement by a central character.
Enhancement twist_enhancement(const GroupLabel& g, const Enhancement& e, int chi_prime);

} // namespace springer
