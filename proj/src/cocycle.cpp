#include "springer/cocycle.hpp"

#include <stdexcept>

#include "springer/character_table.hpp"

namespace springer {

Cocycle Cocycle::trivial(int group_size, int modulus)
{
    Cocycle k;
    k.modulus = modulus;
    k.table.assign(group_size, std::vector<int>(group_size, 0));
    return k;
}

bool validate_cocycle(const FiniteGroup& g, const Cocycle& k)
{
    int n = g.size();
    if (k.size() != n || k.modulus < 1)
        return false;
    for (const auto& row : k.table)
        if (static_cast<int>(row.size()) != n)
            return false;
    for (const auto& row : k.table)
        for (int v : row)
            if (v < 0 || v >= k.modulus)
                return false;
    for (int a = 0; a < n; a++)
        if (k.at(0, a) != 0 || k.at(a, 0) != 0)
            return false;
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            for (int c = 0; c < n; c++) {
                int lhs = (k.at(a, b) + k.at(g.mul(a, b), c)) % k.modulus;
                int rhs = (k.at(a, g.mul(b, c)) + k.at(b, c)) % k.modulus;
                if (lhs != rhs)
                    return false;
            }
    return true;
}

Cocycle coboundary_twist(const FiniteGroup& g, const Cocycle& k,
                         const std::vector<int>& eta)
{
    if (static_cast<int>(eta.size()) != g.size())
        throw std::invalid_argument("coboundary_twist: eta has wrong size");
    int m = k.modulus;
    if (((eta[0] % m) + m) % m != 0)
        throw std::invalid_argument("coboundary_twist: eta(identity) must vanish");
    Cocycle out = k;
    for (int a = 0; a < g.size(); a++)
        for (int b = 0; b < g.size(); b++) {
            long long v = k.at(a, b) + eta[a] + eta[b] - eta[g.mul(a, b)];
            out.table[a][b] = static_cast<int>(((v % m) + m) % m);
        }
    return out;
}

Cocycle cup_product_cocycle(const FiniteGroup& g, const std::vector<int>& f,
                            const std::vector<int>& h, int modulus)
{
    Cocycle out = Cocycle::trivial(g.size(), modulus);
    for (int a = 0; a < g.size(); a++)
        for (int b = 0; b < g.size(); b++)
            out.table[a][b] = static_cast<int>(
                (static_cast<long long>(f[a]) * h[b]) % modulus);
    return out;
}

std::vector<int> kappa_regular_classes(const FiniteGroup& g, const Cocycle& k)
{
    auto classes = conjugacy_classes(g);
    std::vector<int> regular;
    for (size_t c = 0; c < classes.size(); c++) {
        int x = classes[c][0];
        bool reg = true;
        for (int y : g.centralizer(x))
            if (k.at(x, y) != k.at(y, x)) {
                reg = false;
                break;
            }
        if (reg)
            regular.push_back(static_cast<int>(c));
    }
    return regular;
}

std::vector<std::vector<int>> homs_to_cyclic(const FiniteGroup& g, int m)
{
    // characters of G/[G,G] with values in Z/m, pulled back to G
    auto comm = g.commutator_subgroup();
    // brute force over assignments is wasteful; instead walk the abelian
    // quotient's character group by extension, reusing the ambient table
    std::vector<int> coset_of(g.size(), -1);
    std::vector<int> coset_rep;
    for (int x = 0; x < g.size(); x++) {
        if (coset_of[x] >= 0) continue;
        int id = static_cast<int>(coset_rep.size());
        for (int h : comm)
            coset_of[g.mul(x, h)] = id;
        coset_rep.push_back(x);
    }
    int q = static_cast<int>(coset_rep.size());
    std::vector<std::vector<int>> qt(q, std::vector<int>(q));
    for (int a = 0; a < q; a++)
        for (int b = 0; b < q; b++)
            qt[a][b] = coset_of[g.mul(coset_rep[a], coset_rep[b])];
    // force coset of identity to index of identity coset
    FiniteGroup quotient = FiniteGroup::from_table(std::move(qt));

    auto tbl = character_table(quotient);
    std::vector<std::vector<int>> out;
    int e = quotient.exponent();
    for (size_t r = 0; r < tbl.values.size(); r++) {
        // keep characters whose order divides m: exponents all multiples of e/gcd(e,m)
        std::vector<int> exps(quotient.size());
        bool ok = true;
        for (int x = 0; x < quotient.size() && ok; x++) {
            // abelian: class index == position of singleton class of x
            int cls = -1;
            for (size_t c = 0; c < tbl.classes.size(); c++)
                if (tbl.classes[c][0] == x)
                    cls = static_cast<int>(c);
            // recover the exponent of the root of unity
            const Cyclotomic& v = tbl.values[r][cls];
            int found = -1;
            for (int k = 0; k < e; k++)
                if (v == Cyclotomic::root_of_unity(e, k)) {
                    found = k;
                    break;
                }
            if (found < 0)
                throw std::logic_error("homs_to_cyclic: non-root value");
            if ((static_cast<long long>(found) * m) % e != 0)
                ok = false;
            else
                exps[x] = static_cast<int>((static_cast<long long>(found) * m / e) % m);
        }
        if (!ok)
            continue;
        std::vector<int> full(g.size());
        for (int x = 0; x < g.size(); x++)
            full[x] = exps[coset_of[x]];
        out.push_back(std::move(full));
    }
    return out;
}

} // namespace springer
