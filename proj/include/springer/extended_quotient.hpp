#pragma once

#include <map>
#include <string>
#include <vector>

#include "springer/twisted_algebra.hpp"

namespace springer {

/* A finite group action on a finite set, by action table.  Validated on
 * construction.
 */
class GroupAction {
public:
    GroupAction() = default;
    static GroupAction create(FiniteGroup gamma, int npoints,
                              std::vector<std::vector<int>> table);

    const FiniteGroup& group() const { return gamma_; }
    int npoints() const { return npoints_; }
    int act(int g, int x) const { return table_[g][x]; }

    std::vector<std::vector<int>> orbits() const; // sorted, minimal point first
    std::vector<int> stabilizer(int x) const;     // ambient element indices

private:
    FiniteGroup gamma_;
    int npoints_ = 0;
    std::vector<std::vector<int>> table_;
};

// theta_{gamma,x} as a map between stabilizer subgroups in local indices,
// with a scalar correction: T_s |-> zeta^corr[s] T_map[s]
struct ThetaMap {
    std::vector<int> map;
    std::vector<int> corr;
};

/* Strict twisted quotient data: per-point cocycles on the stabilizers and
 * gluing isomorphisms, together with the witnesses that make validation a
 * pure arithmetic check: eta_{gamma,x} exhibiting kappa_{gamma x} ~
 * gamma_*(kappa_x), and for gamma in Gamma_x the basis unit h with
 * theta_{gamma,x} = conjugation by T_h.
 */
struct TwistedQuotientData {
    int modulus = 1;
    std::vector<Cocycle> kappa;               // per point, local indices
    std::vector<std::vector<ThetaMap>> theta; // [gamma][x]
    std::vector<std::vector<std::vector<int>>> coh_witness; // [gamma][x] eta on stab(gamma x)
    std::map<std::pair<int, int>, int> inner_witness;       // (gamma, x) -> local h
};

struct Violation {
    int condition; // 0: not an algebra isomorphism, 1..3: the numbered conditions
    int gamma;
    int x;
    std::string detail;
};

std::vector<Violation> validate(const GroupAction& a, const TwistedQuotientData& d);

// trivial cocycles, theta = conjugation
TwistedQuotientData trivial_data(const GroupAction& a, int modulus = 1);

// strict data synthesized from one basepoint per orbit, a cocycle on its
// stabilizer and section lifts sigma_x with sigma_x basepoint = x
struct BasepointSpec {
    int basepoint = 0;
    Cocycle kappa0;
    std::vector<int> lifts; // per point of the orbit's ambient set; -1 off-orbit
};

TwistedQuotientData strict_from_basepoints(const GroupAction& a, int modulus,
                                           const std::vector<BasepointSpec>& specs);

/* A point of the twisted extended quotient: the minimal point x of the
 * orbit of pairs, the index of the irreducible in the twisted algebra at x,
 * and its trace signature there.
 */
struct ExtendedQuotientPoint {
    int base_point = 0;
    int irrep = 0;
    int degree = 0;
    long long pair_orbit_size = 0;
    std::vector<Cyclotomic> signature; // element traces at base_point

    bool operator==(const ExtendedQuotientPoint& o) const
    {
        return base_point == o.base_point && signature == o.signature;
    }
};

// orbits of pairs (x, rho) under the theta-twisted action, deterministic
std::vector<ExtendedQuotientPoint> build(const GroupAction& a,
                                         const TwistedQuotientData& d);

// independent count of the plain extended quotient (ordinary characters,
// conjugation action); used to cross-check trivial data builds
long long plain_extended_quotient_size(const GroupAction& a);

bool trivial_quotient_compare(const GroupAction& a);

// blockwise quotients then the ordinary Gamma-quotient; requires
// N_Gamma(X_i)_x = Gamma_x for every block and point (else throws)
std::vector<ExtendedQuotientPoint> two_step_quotient(
    const GroupAction& a, const std::vector<std::vector<int>>& blocks,
    const TwistedQuotientData& d);

} // namespace springer
