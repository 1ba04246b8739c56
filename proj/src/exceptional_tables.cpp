#include "springer/orbits.hpp"

#include <stdexcept>

/* Per-orbit data for the exceptional simply-connected groups: Bala-Carter
 * label, component group A(O), and the orbit carrying the cuspidal local
 * system(s) -- the distinguished orbit of minimal dimension.  Orbits are
 * listed by increasing dimension.  Data follows Collingwood-McGovern (8.4)
 * with component groups taken for the simply-connected form; mu2/mu3
 * factors record an injective image of the center.
 */

namespace springer {

namespace {

ComponentGroup triv() { return ComponentGroup::trivial(); }
ComponentGroup s(int k) { return ComponentGroup::sym(k); }
ComponentGroup mu(int c) { return ComponentGroup::trivial().with_center(c); }
ComponentGroup mus(int c, int k) { return ComponentGroup::sym(k).with_center(c); }

const std::vector<ExceptionalOrbitInfo> g2_table = {
    {"0", triv(), false},
    {"A1", triv(), false},
    {"A1~", triv(), false},
    {"G2(a1)", s(3), true},
    {"G2", triv(), false},
};

const std::vector<ExceptionalOrbitInfo> f4_table = {
    {"0", triv(), false},
    {"A1", triv(), false},
    {"A1~", s(2), false},
    {"A1+A1~", triv(), false},
    {"A2", s(2), false},
    {"A2~", triv(), false},
    {"A2+A1~", triv(), false},
    {"B2", s(2), false},
    {"A2~+A1", triv(), false},
    {"C3(a1)", s(2), false},
    {"F4(a3)", s(4), true},
    {"B3", triv(), false},
    {"C3", triv(), false},
    {"F4(a2)", s(2), false},
    {"F4(a1)", s(2), false},
    {"F4", triv(), false},
};

const std::vector<ExceptionalOrbitInfo> e6_table = {
    {"0", triv(), false},
    {"A1", triv(), false},
    {"2A1", triv(), false},
    {"3A1", triv(), false},
    {"A2", s(2), false},
    {"A2+A1", triv(), false},
    {"2A2", mu(3), false},
    {"A2+2A1", triv(), false},
    {"A3", triv(), false},
    {"2A2+A1", mu(3), false},
    {"A3+A1", triv(), false},
    {"D4(a1)", s(3), false},
    {"A4", triv(), false},
    {"D4", triv(), false},
    {"A4+A1", triv(), false},
    {"A5", mu(3), false},
    {"D5(a1)", triv(), false},
    {"E6(a3)", mus(3, 2), true},
    {"D5", triv(), false},
    {"E6(a1)", mu(3), false},
    {"E6", mu(3), false},
};

const std::vector<ExceptionalOrbitInfo> e7_table = {
    {"0", triv(), false},
    {"A1", triv(), false},
    {"2A1", triv(), false},
    {"(3A1)''", mu(2), false},
    {"(3A1)'", triv(), false},
    {"A2", s(2), false},
    {"4A1", mu(2), false},
    {"A2+A1", s(2), false},
    {"A2+2A1", triv(), false},
    {"A3", triv(), false},
    {"2A2", triv(), false},
    {"A2+3A1", mu(2), false},
    {"(A3+A1)''", mu(2), false},
    {"2A2+A1", triv(), false},
    {"(A3+A1)'", triv(), false},
    {"D4(a1)", s(3), false},
    {"A3+2A1", mu(2), false},
    {"D4", triv(), false},
    {"D4(a1)+A1", mus(2, 2), false},
    {"A3+A2", s(2), false},
    {"A4", s(2), false},
    {"A3+A2+A1", mu(2), false},
    {"(A5)''", mu(2), false},
    {"D4+A1", triv(), false},
    {"A4+A1", triv(), false},
    {"D5(a1)", s(2), false},
    {"A4+A2", triv(), false},
    {"(A5)'", triv(), false},
    {"A5+A1", mu(2), false},
    {"D5(a1)+A1", mu(2), false},
    {"D6(a2)", s(2), false},
    {"E6(a3)", s(2), false},
    {"D5", triv(), false},
    {"E7(a5)", mus(2, 3), true},
    {"A6", triv(), false},
    {"D5+A1", mu(2), false},
    {"D6(a1)", mu(2), false},
    {"E7(a4)", mus(2, 2), false},
    {"D6", mu(2), false},
    {"E6(a1)", s(2), false},
    {"E6", triv(), false},
    {"E7(a3)", mus(2, 2), false},
    {"E7(a2)", mu(2), false},
    {"E7(a1)", mu(2), false},
    {"E7", mu(2), false},
};

const std::vector<ExceptionalOrbitInfo> e8_table = {
    {"0", triv(), false},
    {"A1", triv(), false},
    {"2A1", triv(), false},
    {"3A1", triv(), false},
    {"A2", s(2), false},
    {"4A1", triv(), false},
    {"A2+A1", s(2), false},
    {"A2+2A1", triv(), false},
    {"A3", triv(), false},
    {"A2+3A1", triv(), false},
    {"2A2", s(2), false},
    {"2A2+A1", triv(), false},
    {"A3+A1", triv(), false},
    {"D4(a1)", s(3), false},
    {"D4", triv(), false},
    {"2A2+2A1", triv(), false},
    {"A3+2A1", triv(), false},
    {"D4(a1)+A1", s(3), false},
    {"A3+A2", s(2), false},
    {"A4", s(2), false},
    {"A3+A2+A1", triv(), false},
    {"D4+A1", triv(), false},
    {"D4(a1)+A2", s(2), false},
    {"A4+A1", s(2), false},
    {"2A3", triv(), false},
    {"D5(a1)", s(2), false},
    {"A4+2A1", s(2), false},
    {"A4+A2", s(2), false},
    {"A5", triv(), false},
    {"D5(a1)+A1", triv(), false},
    {"A4+A2+A1", triv(), false},
    {"D4+A2", s(2), false},
    {"E6(a3)", s(2), false},
    {"D5", triv(), false},
    {"A4+A3", triv(), false},
    {"A5+A1", triv(), false},
    {"D5(a1)+A2", triv(), false},
    {"D6(a2)", s(2), false},
    {"E6(a3)+A1", s(2), false},
    {"E7(a5)", s(3), false},
    {"D5+A1", triv(), false},
    {"E8(a7)", s(5), true},
    {"A6", triv(), false},
    {"D6(a1)", s(2), false},
    {"A6+A1", triv(), false},
    {"E7(a4)", s(2), false},
    {"E6(a1)", s(2), false},
    {"D5+A2", triv(), false},
    {"D6", triv(), false},
    {"E6", triv(), false},
    {"D7(a2)", s(2), false},
    {"A7", triv(), false},
    {"E6(a1)+A1", s(2), false},
    {"E7(a3)", s(2), false},
    {"E8(b6)", s(3), false},
    {"D7(a1)", s(2), false},
    {"E6+A1", triv(), false},
    {"E7(a2)", triv(), false},
    {"E8(a6)", s(3), false},
    {"D7", triv(), false},
    {"E8(b5)", s(3), false},
    {"E7(a1)", triv(), false},
    {"E8(a5)", s(2), false},
    {"E8(b4)", s(2), false},
    {"E7", triv(), false},
    {"E8(a4)", s(2), false},
    {"E8(a3)", s(2), false},
    {"E8(a2)", triv(), false},
    {"E8(a1)", triv(), false},
    {"E8", triv(), false},
};

} // namespace

const std::vector<ExceptionalOrbitInfo>& exceptional_orbit_table(Family f)
{
    switch (f) {
    case Family::G2: return g2_table;
    case Family::F4: return f4_table;
    case Family::E6: return e6_table;
    case Family::E7: return e7_table;
    case Family::E8: return e8_table;
    default:
        throw std::invalid_argument("exceptional_orbit_table: exceptional family required");
    }
}

} // namespace springer
