#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

// A simply-connected simple group, named by family and (classical) rank.
struct GroupLabel {
    Family family;
    int rank = 0; // classical only; exceptional groups ignore it

    bool classical() const { return is_classical(family); }
    std::string to_string() const;
};

GroupLabel make_group(Family f, int rank = 0);

// Labels for the two orbits attached to a very even type-D partition.
enum class VeryEvenTag { None, I, II };

struct ClassicalOrbit {
    Partition partition;
    VeryEvenTag tag = VeryEvenTag::None;
    bool operator==(const ClassicalOrbit& o) const
    {
        return partition == o.partition && tag == o.tag;
    }
};

struct ExceptionalOrbit {
    std::string bala_carter;
    bool operator==(const ExceptionalOrbit& o) const
    {
        return bala_carter == o.bala_carter;
    }
};

using OrbitLabel = std::variant<ClassicalOrbit, ExceptionalOrbit>;

std::string orbit_name(const OrbitLabel& o);

/* Description of the component group A(O) of an orbit centralizer.
 *
 * kind/param give the noncentral factor:
 *   Trivial                 the trivial group
 *   Cyclic                  Z/param
 *   Elem2                   (Z/2)^param
 *   Sym                     the symmetric group S_param
 *   CentralExt2             a central extension of Z/2 by (Z/2)^param,
 *                           multiplication left unspecified
 * center > 1 records a mu_center direct factor (types E6 and E7 only).
 *
 * Factories normalize the degenerate cases: Cyclic(1) and Elem2(0) are
 * Trivial, and CentralExt2(0) is Cyclic(2) (an extension of Z/2 by the
 * trivial group is determined).
 */
struct ComponentGroup {
    enum class Kind { Trivial, Cyclic, Elem2, Sym, CentralExt2 };

    Kind kind = Kind::Trivial;
    long long param = 0;
    int center = 1;

    static ComponentGroup trivial();
    static ComponentGroup cyclic(long long c);
    static ComponentGroup elem2(long long k);
    static ComponentGroup sym(int k);
    static ComponentGroup central_ext2(long long k);
    ComponentGroup with_center(int c) const;

    // order, when determined (CentralExt2 has known order 2^(param+1))
    long long order() const;

    bool operator==(const ComponentGroup& o) const
    {
        return kind == o.kind && param == o.param && center == o.center;
    }
    bool operator<(const ComponentGroup& o) const
    {
        if (kind != o.kind) return kind < o.kind;
        if (param != o.param) return param < o.param;
        return center < o.center;
    }

    std::string to_string() const;
};

// All nilpotent orbits of g, in a fixed deterministic order.  Classical
// groups enumerate valid partitions (descending lexicographic), splitting
// each very even type-D partition into tags I and II; exceptional groups
// list the embedded Bala-Carter table.
std::vector<OrbitLabel> enumerate_orbits(const GroupLabel& g);

// A(O).  Classical rules:
//   A: Z/c, c = gcd of parts.
//   B: some odd part repeated -> (Z/2)^(a-1); all odd parts simple ->
//      central extension of Z/2 by (Z/2)^(a-1).
//   C: (Z/2)^b.
//   D: as B with exponent max(0, a-1).
// Exceptional: table lookup.  Throws if the orbit is not valid for g.
ComponentGroup component_group(const GroupLabel& g, const OrbitLabel& o);

// Census {A(O) -> #orbits} for an exceptional group, sorted by descriptor.
std::vector<std::pair<ComponentGroup, int>> exceptional_census(const GroupLabel& g);

// Embedded per-orbit data for exceptional groups.
struct ExceptionalOrbitInfo {
    std::string bala_carter;
    ComponentGroup a_group;
    bool cuspidal; // carries the cuspidal local system(s)
};

const std::vector<ExceptionalOrbitInfo>& exceptional_orbit_table(Family f);

} // namespace springer
