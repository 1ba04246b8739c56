#include "springer/cuspidal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace springer {

namespace {

Partition arithmetic_orbit(int first, int step, int count)
{
    std::vector<int> parts;
    for (int i = 0; i < count; i++)
        parts.push_back(first + step * i);
    return Partition(parts);
}

long long pow2(long long e)
{
    return 1LL << e;
}

// Solve k(2k-1) = N or k(2k+1) = N; at most one of the two has a positive
// solution for a given N.  Returns (k, first part 1 or 3) or k = 0.
struct TriangularOrbit { long long k = 0; int first = 0; };

TriangularOrbit triangular_orbit_shape(long long total)
{
    for (long long k = 1; 2 * k * k - k <= total; k++) {
        if (2 * k * k - k == total) return {k, 1};
        if (2 * k * k + k == total) return {k, 3};
    }
    return {};
}

} // namespace

std::string LocalSystemLabel::to_string() const
{
    switch (kind) {
    case Kind::CyclicCharacter:
        return "chi_" + std::to_string(exponent) + " mod " + std::to_string(modulus) +
               " on " + orbit_name(orbit);
    case Kind::CentralCharacter:
        return central + " on " + orbit_name(orbit);
    case Kind::DimTagged:
        return central + " (dim " + std::to_string(dim) + ") on " + orbit_name(orbit);
    case Kind::SignTimesCentral:
        return "sign*" + central + " on " + orbit_name(orbit);
    }
    return "?";
}

CuspidalSystems cuspidal_systems(const GroupLabel& g)
{
    CuspidalSystems out;
    switch (g.family) {
    case Family::A: {
        long long m = g.rank + 1;
        OrbitLabel reg = ClassicalOrbit{Partition({static_cast<int>(m)}), VeryEvenTag::None};
        for (long long k = 0; k < m; k++) {
            if (std::gcd(k, m) != 1)
                continue;
            LocalSystemLabel l;
            l.orbit = reg;
            l.kind = LocalSystemLabel::Kind::CyclicCharacter;
            l.modulus = m;
            l.exponent = k;
            l.central = "order " + std::to_string(m);
            out.systems.push_back(std::move(l));
        }
        break;
    }
    case Family::B: {
        long long total = 2LL * g.rank + 1;
        if (auto r = square_witness(total)) {
            LocalSystemLabel l;
            l.orbit = ClassicalOrbit{arithmetic_orbit(1, 2, static_cast<int>(*r)),
                                     VeryEvenTag::None};
            l.kind = LocalSystemLabel::Kind::CentralCharacter;
            l.central = "triv";
            out.systems.push_back(std::move(l));
        }
        if (triangular_witness(total)) {
            auto shape = triangular_orbit_shape(total);
            if (shape.k == 0)
                throw std::logic_error("cuspidal_systems: no orbit fits triangular total");
            LocalSystemLabel l;
            l.orbit = ClassicalOrbit{
                arithmetic_orbit(shape.first, 4, static_cast<int>(shape.k)),
                VeryEvenTag::None};
            l.kind = LocalSystemLabel::Kind::DimTagged;
            l.central = "nontriv";
            l.dim = pow2((shape.k - 1) / 2);
            out.systems.push_back(std::move(l));
        }
        break;
    }
    case Family::C: {
        if (auto d = triangular_witness(g.rank); d && *d >= 1) {
            LocalSystemLabel l;
            l.orbit = ClassicalOrbit{arithmetic_orbit(2, 2, static_cast<int>(*d)),
                                     VeryEvenTag::None};
            l.kind = LocalSystemLabel::Kind::CentralCharacter;
            l.central = g.rank % 2 == 0 ? "triv" : "nontriv";
            out.systems.push_back(std::move(l));
        }
        break;
    }
    case Family::D: {
        long long total = 2LL * g.rank;
        bool square = false, triangular = false;
        if (auto r = square_witness(total)) {
            square = true;
            long long s = *r / 2; // r is even: 2n = r*r forces r even
            LocalSystemLabel l;
            l.orbit = ClassicalOrbit{arithmetic_orbit(1, 2, static_cast<int>(*r)),
                                     VeryEvenTag::None};
            l.kind = LocalSystemLabel::Kind::CentralCharacter;
            l.central = (s * s) % 2 == 0 ? "1" : "z_SO";
            out.systems.push_back(std::move(l));
        }
        if (triangular_witness(total)) {
            triangular = true;
            auto shape = triangular_orbit_shape(total);
            if (shape.k == 0)
                throw std::logic_error("cuspidal_systems: no orbit fits triangular total");
            for (const char* central : {"z+", "z-"}) {
                LocalSystemLabel l;
                l.orbit = ClassicalOrbit{
                    arithmetic_orbit(shape.first, 4, static_cast<int>(shape.k)),
                    VeryEvenTag::None};
                l.kind = LocalSystemLabel::Kind::DimTagged;
                l.central = central;
                l.dim = pow2((shape.k - 1) / 2);
                out.systems.push_back(std::move(l));
            }
        }
        if (square && triangular)
            out.warnings.push_back(
                "D" + std::to_string(g.rank) + ": " + std::to_string(total) +
                " is both square and triangular; the square rule (one system) and "
                "triangular rule (two systems) together give three, though the "
                "narrative count for this case is two");
        break;
    }
    default: {
        const auto& table = exceptional_orbit_table(g.family);
        int c = exceptional_center_order(g.family);
        for (const auto& row : table) {
            if (!row.cuspidal)
                continue;
            if (c == 1) {
                LocalSystemLabel l;
                l.orbit = ExceptionalOrbit{row.bala_carter};
                l.kind = LocalSystemLabel::Kind::SignTimesCentral;
                l.modulus = 1;
                l.exponent = 0;
                l.central = "triv";
                out.systems.push_back(std::move(l));
            } else {
                for (int j = 1; j < c; j++) {
                    LocalSystemLabel l;
                    l.orbit = ExceptionalOrbit{row.bala_carter};
                    l.kind = LocalSystemLabel::Kind::SignTimesCentral;
                    l.modulus = c;
                    l.exponent = j;
                    l.central = "chi^" + std::to_string(j);
                    out.systems.push_back(std::move(l));
                }
            }
        }
        break;
    }
    }
    return out;
}

bool has_cuspidal(const GroupLabel& g)
{
    return !cuspidal_systems(g).systems.empty();
}

std::string LeviShape::to_string() const
{
    std::string s;
    for (size_t i = 0; i < gl_sizes.size(); i++) {
        if (i) s += " x ";
        s += "GL" + std::to_string(gl_sizes[i]);
    }
    if (core_rank > 0) {
        if (!s.empty()) s += " x ";
        s += family_name(family) + std::to_string(core_rank);
    }
    if (s.empty())
        s = "T";
    return s;
}

std::vector<CuspidalDatum> cuspidal_levi_data(const GroupLabel& g)
{
    if (!g.classical())
        throw std::invalid_argument("cuspidal_levi_data: classical group required");

    std::vector<CuspidalDatum> out;

    // GL multisets are nonincreasing partitions of the GL budget.
    auto emit_for_shape = [&](const std::vector<int>& gl, int core) {
        std::vector<std::vector<LocalSystemLabel>> choices;
        for (int a : gl) {
            auto sys = cuspidal_systems(make_group(Family::A, std::max(1, a - 1)));
            if (a == 1) {
                // GL1: the single trivial character
                LocalSystemLabel l;
                l.orbit = ClassicalOrbit{Partition({1}), VeryEvenTag::None};
                l.kind = LocalSystemLabel::Kind::CyclicCharacter;
                l.modulus = 1;
                l.exponent = 0;
                l.central = "order 1";
                choices.push_back({l});
            } else {
                choices.push_back(sys.systems);
            }
        }
        if (core > 0) {
            auto sys = cuspidal_systems(make_group(g.family, core));
            if (sys.systems.empty())
                return;
            choices.push_back(sys.systems);
        }
        // cartesian product over per-factor choices
        std::vector<size_t> idx(choices.size(), 0);
        while (true) {
            CuspidalDatum d;
            d.levi = LeviShape{g.family, gl, core};
            for (size_t i = 0; i < choices.size(); i++)
                d.factor_systems.push_back(choices[i][idx[i]]);
            out.push_back(std::move(d));
            size_t i = 0;
            for (; i < choices.size(); i++) {
                if (++idx[i] < choices[i].size())
                    break;
                idx[i] = 0;
            }
            if (i == choices.size())
                break;
        }
    };

    if (g.family == Family::A) {
        // Levis of SL_{n+1} are the GL compositions of n+1, up to reordering.
        for (auto& p : all_partitions(g.rank + 1))
            if (!p.empty())
                emit_for_shape(p.parts(), 0);
    } else {
        // core rank 1 in type D folds into a GL1 factor
        for (int core = g.rank; core >= 0; core--) {
            if (g.family == Family::D && core == 1)
                continue;
            for (auto& p : all_partitions(g.rank - core))
                emit_for_shape(p.parts(), core);
        }
    }
    return out;
}

int exceptional_center_order(Family f)
{
    switch (f) {
    case Family::E6: return 3;
    case Family::E7: return 2;
    case Family::E8:
    case Family::F4:
    case Family::G2: return 1;
    default:
        throw std::invalid_argument("exceptional_center_order: exceptional family required");
    }
}

bool is_sign_label(const Partition& sym_label, int k)
{
    return sym_label.size() == k && !sym_label.empty() && sym_label.parts()[0] == 1;
}

std::vector<Enhancement> enumerate_enhancements(const GroupLabel& g)
{
    if (g.classical())
        throw std::invalid_argument("enumerate_enhancements: exceptional group required");
    std::vector<Enhancement> out;
    for (const auto& row : exceptional_orbit_table(g.family)) {
        int c = row.a_group.center;
        std::vector<Partition> sym_labels;
        if (row.a_group.kind == ComponentGroup::Kind::Sym)
            sym_labels = all_partitions(static_cast<int>(row.a_group.param));
        else
            sym_labels = {Partition()};
        for (int j = 0; j < c; j++)
            for (const auto& s : sym_labels)
                out.push_back({row.bala_carter, j, s});
    }
    return out;
}

namespace {

struct StoredLevi {
    std::string type;
    std::vector<int> roots;
};

StoredLevi stored_cuspidal_levi(Family f)
{
    // Simple-root subsets in Bourbaki numbering (0-indexed).
    if (f == Family::E6)
        return {"A2+A2", {0, 2, 4, 5}};
    if (f == Family::E7)
        return {"A1+A1+A1", {1, 4, 6}};
    throw std::invalid_argument("stored_cuspidal_levi: E6 or E7 required");
}

} // namespace

CuspidalSupport cuspidal_support_exceptional(const GroupLabel& g, const Enhancement& e)
{
    if (g.classical())
        throw std::invalid_argument("cuspidal_support_exceptional: exceptional group required");
    const auto& table = exceptional_orbit_table(g.family);
    const ExceptionalOrbitInfo* row = nullptr;
    for (const auto& r : table)
        if (r.bala_carter == e.orbit)
            row = &r;
    if (!row)
        throw std::invalid_argument("cuspidal_support_exceptional: unknown orbit " + e.orbit);

    int c = row->a_group.center;
    if (e.central_exponent < 0 || e.central_exponent >= c)
        throw std::invalid_argument("cuspidal_support_exceptional: central exponent out of range");
    if (row->a_group.kind == ComponentGroup::Kind::Sym) {
        if (e.sym_label.sum() != row->a_group.param)
            throw std::invalid_argument("cuspidal_support_exceptional: bad symmetric label");
    } else if (!e.sym_label.empty()) {
        throw std::invalid_argument("cuspidal_support_exceptional: unexpected symmetric label");
    }

    int center = exceptional_center_order(g.family);
    bool sign = row->a_group.kind == ComponentGroup::Kind::Sym &&
                is_sign_label(e.sym_label, static_cast<int>(row->a_group.param));
    bool cuspidal = row->cuspidal && sign && (center == 1 || e.central_exponent != 0);

    CuspidalSupport s;
    if (cuspidal) {
        s.self = true;
        s.levi = "G";
        s.orbit = e.orbit;
        s.system = center == 1 ? "sign" : "sign*chi^" + std::to_string(e.central_exponent);
        s.central_exponent = e.central_exponent;
        return s;
    }
    if (center == 1 || e.central_exponent == 0) {
        s.levi = "T";
        s.orbit = "0";
        s.system = "triv";
        s.central_exponent = 0;
        return s;
    }
    auto levi = stored_cuspidal_levi(g.family);
    s.levi = levi.type;
    s.levi_roots = levi.roots;
    s.orbit = "regular";
    s.system = "E_chi^" + std::to_string(e.central_exponent);
    s.central_exponent = e.central_exponent;
    return s;
}

Enhancement twist_enhancement(const GroupLabel& g, const Enhancement& e, int chi_prime)
{
    if (g.classical())
        throw std::invalid_argument("twist_enhancement: exceptional group required");
    const auto& table = exceptional_orbit_table(g.family);
    for (const auto& r : table)
        if (r.bala_carter == e.orbit) {
            Enhancement out = e;
            int c = r.a_group.center;
            out.central_exponent = ((e.central_exponent + chi_prime) % c + c) % c;
            return out;
        }
    throw std::invalid_argument("twist_enhancement: unknown orbit " + e.orbit);
}

} // namespace springer
