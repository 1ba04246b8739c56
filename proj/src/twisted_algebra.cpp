#include "springer/twisted_algebra.hpp"

#include <stdexcept>

namespace springer {

TwistedIrreps twisted_irreps(const FiniteGroup& g, const Cocycle& kappa, int max_order)
{
    if (!validate_cocycle(g, kappa))
        throw std::invalid_argument("twisted_irreps: invalid cocycle");
    int n = g.size();
    int m = kappa.modulus;
    if (static_cast<long long>(n) * m > max_order)
        throw std::domain_error("twisted_irreps: extension order exceeds bound");

    // central extension: (a, s)(b, t) = (ab, s + t + kappa(a,b))
    auto idx = [m](int a, int s) { return a * m + s; };
    std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
    for (int a = 0; a < n; a++)
        for (int s = 0; s < m; s++)
            for (int b = 0; b < n; b++)
                for (int t = 0; t < m; t++)
                    table[idx(a, s)][idx(b, t)] =
                        idx(g.mul(a, b), (s + t + kappa.at(a, b)) % m);
    FiniteGroup ext = FiniteGroup::from_table(std::move(table));

    auto tbl = character_table(ext, max_order);
    int econd = ext.exponent();
    Cyclotomic zeta_m = Cyclotomic::root_of_unity(econd, econd / m);

    // class lookup for elements (a, 0) and the central element (0, 1)
    std::vector<int> class_of(ext.size(), -1);
    for (size_t c = 0; c < tbl.classes.size(); c++)
        for (int e : tbl.classes[c])
            class_of[e] = static_cast<int>(c);

    auto regular = kappa_regular_classes(g, kappa);
    auto gclasses = conjugacy_classes(g);

    TwistedIrreps out;
    out.regular_classes = regular;
    int central_class = m == 1 ? class_of[0] : class_of[idx(0, 1)];
    for (size_t r = 0; r < tbl.values.size(); r++) {
        // the central Z/m must act by the standard faithful character
        Cyclotomic expect = zeta_m * Cyclotomic(tbl.degrees[r]);
        if (m > 1 && tbl.values[r][central_class] != expect)
            continue;
        out.count++;
        out.degrees.push_back(tbl.degrees[r]);
        std::vector<Cyclotomic> tr;
        for (int c : regular)
            tr.push_back(tbl.values[r][class_of[idx(gclasses[c][0], 0)]]);
        out.traces.push_back(std::move(tr));
        std::vector<Cyclotomic> el(n);
        for (int a = 0; a < n; a++)
            el[a] = tbl.values[r][class_of[idx(a, 0)]];
        out.element_traces.push_back(std::move(el));
    }

    if (out.count != static_cast<int>(regular.size()))
        throw std::logic_error("twisted_irreps: count does not match regular classes");
    long long sq = 0;
    for (int d : out.degrees)
        sq += static_cast<long long>(d) * d;
    if (sq != n)
        throw std::logic_error("twisted_irreps: sum of squares mismatch");
    return out;
}

} // namespace springer
