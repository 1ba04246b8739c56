#include "springer/orbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace springer {

std::string GroupLabel::to_string() const
{
    if (classical())
        return family_name(family) + std::to_string(rank);
    return family_name(family);
}

GroupLabel make_group(Family f, int rank)
{
    GroupLabel g{f, rank};
    if (is_classical(f)) {
        int min_rank = (f == Family::D) ? 2 : 1;
        if (rank < min_rank)
            throw std::invalid_argument("make_group: rank too small for " + family_name(f));
    } else {
        g.rank = 0;
    }
    return g;
}

std::string orbit_name(const OrbitLabel& o)
{
    if (std::holds_alternative<ExceptionalOrbit>(o))
        return std::get<ExceptionalOrbit>(o).bala_carter;
    const auto& c = std::get<ClassicalOrbit>(o);
    std::string s = c.partition.to_string();
    if (c.tag == VeryEvenTag::I) s += "^I";
    if (c.tag == VeryEvenTag::II) s += "^II";
    return s;
}

ComponentGroup ComponentGroup::trivial()
{
    return {};
}

ComponentGroup ComponentGroup::cyclic(long long c)
{
    if (c < 1) throw std::invalid_argument("cyclic: order must be >= 1");
    if (c == 1) return trivial();
    return {Kind::Cyclic, c, 1};
}

ComponentGroup ComponentGroup::elem2(long long k)
{
    if (k < 0) throw std::invalid_argument("elem2: negative exponent");
    if (k == 0) return trivial();
    return {Kind::Elem2, k, 1};
}

ComponentGroup ComponentGroup::sym(int k)
{
    if (k < 2 || k > 5) throw std::invalid_argument("sym: k must be in 2..5");
    return {Kind::Sym, k, 1};
}

ComponentGroup ComponentGroup::central_ext2(long long k)
{
    if (k < 0) throw std::invalid_argument("central_ext2: negative exponent");
    if (k == 0) return cyclic(2);
    return {Kind::CentralExt2, k, 1};
}

ComponentGroup ComponentGroup::with_center(int c) const
{
    if (c != 2 && c != 3) throw std::invalid_argument("with_center: mu2 or mu3 only");
    ComponentGroup g = *this;
    g.center = c;
    return g;
}

long long ComponentGroup::order() const
{
    long long base = 1;
    switch (kind) {
    case Kind::Trivial: base = 1; break;
    case Kind::Cyclic: base = param; break;
    case Kind::Elem2: base = 1LL << param; break;
    case Kind::Sym: {
        base = 1;
        for (long long i = 2; i <= param; i++) base *= i;
        break;
    }
    case Kind::CentralExt2: base = 2LL << param; break;
    }
    return base * center;
}

std::string ComponentGroup::to_string() const
{
    std::string s;
    switch (kind) {
    case Kind::Trivial: s = "1"; break;
    case Kind::Cyclic: s = "Z/" + std::to_string(param); break;
    case Kind::Elem2: s = "(Z/2)^" + std::to_string(param); break;
    case Kind::Sym: s = "S" + std::to_string(param); break;
    case Kind::CentralExt2:
        s = "CentralExt(Z/2 by (Z/2)^" + std::to_string(param) + ")";
        break;
    }
    if (center > 1)
        s = "mu" + std::to_string(center) + (kind == Kind::Trivial ? "" : " x " + s);
    return s;
}

std::vector<OrbitLabel> enumerate_orbits(const GroupLabel& g)
{
    std::vector<OrbitLabel> out;
    if (g.classical()) {
        for (auto& p : enumerate_partitions(g.rank, g.family)) {
            if (g.family == Family::D && is_very_even(p)) {
                out.push_back(ClassicalOrbit{p, VeryEvenTag::I});
                out.push_back(ClassicalOrbit{p, VeryEvenTag::II});
            } else {
                out.push_back(ClassicalOrbit{std::move(p), VeryEvenTag::None});
            }
        }
    } else {
        for (const auto& row : exceptional_orbit_table(g.family))
            out.push_back(ExceptionalOrbit{row.bala_carter});
    }
    return out;
}

ComponentGroup component_group(const GroupLabel& g, const OrbitLabel& o)
{
    if (g.classical()) {
        if (!std::holds_alternative<ClassicalOrbit>(o))
            throw std::invalid_argument("component_group: classical orbit expected");
        const auto& c = std::get<ClassicalOrbit>(o);
        const Partition& p = c.partition;
        int required = g.family == Family::A ? g.rank + 1
                     : g.family == Family::B ? 2 * g.rank + 1
                                             : 2 * g.rank;
        if (p.sum() != required || !is_valid_for_type(p, g.family))
            throw std::invalid_argument("component_group: orbit not valid for " + g.to_string());
        if (c.tag != VeryEvenTag::None &&
            (g.family != Family::D || !is_very_even(p)))
            throw std::invalid_argument("component_group: tag only valid for very even type D");
        auto st = partition_stats(p);
        switch (g.family) {
        case Family::A:
            return ComponentGroup::cyclic(st.gcd_of_parts);
        case Family::B:
            return st.all_odd_multiplicity_one
                       ? ComponentGroup::central_ext2(st.distinct_odd_parts - 1)
                       : ComponentGroup::elem2(st.distinct_odd_parts - 1);
        case Family::C:
            return ComponentGroup::elem2(st.distinct_even_parts);
        case Family::D: {
            long long k = std::max(0, st.distinct_odd_parts - 1);
            return st.all_odd_multiplicity_one ? ComponentGroup::central_ext2(k)
                                               : ComponentGroup::elem2(k);
        }
        default: break;
        }
    }
    if (!std::holds_alternative<ExceptionalOrbit>(o))
        throw std::invalid_argument("component_group: exceptional orbit expected");
    const auto& name = std::get<ExceptionalOrbit>(o).bala_carter;
    for (const auto& row : exceptional_orbit_table(g.family))
        if (row.bala_carter == name)
            return row.a_group;
    throw std::invalid_argument("component_group: unknown orbit " + name);
}

std::vector<std::pair<ComponentGroup, int>> exceptional_census(const GroupLabel& g)
{
    if (g.classical())
        throw std::invalid_argument("exceptional_census: exceptional group required");
    std::map<ComponentGroup, int> counts;
    for (const auto& row : exceptional_orbit_table(g.family))
        counts[row.a_group]++;
    return {counts.begin(), counts.end()};
}

} // namespace springer
