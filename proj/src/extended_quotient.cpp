#include "springer/extended_quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace springer {

GroupAction GroupAction::create(FiniteGroup gamma, int npoints,
                                std::vector<std::vector<int>> table)
{
    GroupAction a;
    if (npoints < 1)
        throw std::invalid_argument("GroupAction: at least one point required");
    if (static_cast<int>(table.size()) != gamma.size())
        throw std::invalid_argument("GroupAction: table has wrong number of rows");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != npoints)
            throw std::invalid_argument("GroupAction: table row has wrong size");
        for (int v : row)
            if (v < 0 || v >= npoints)
                throw std::invalid_argument("GroupAction: point out of range");
    }
    for (int x = 0; x < npoints; x++)
        if (table[0][x] != x)
            throw std::invalid_argument("GroupAction: identity must act trivially");
    for (int g = 0; g < gamma.size(); g++)
        for (int h = 0; h < gamma.size(); h++)
            for (int x = 0; x < npoints; x++)
                if (table[gamma.mul(g, h)][x] != table[g][table[h][x]])
                    throw std::invalid_argument("GroupAction: not compatible");
    a.gamma_ = std::move(gamma);
    a.npoints_ = npoints;
    a.table_ = std::move(table);
    return a;
}

std::vector<std::vector<int>> GroupAction::orbits() const
{
    std::vector<std::vector<int>> out;
    std::vector<bool> done(npoints_, false);
    for (int x = 0; x < npoints_; x++) {
        if (done[x]) continue;
        std::set<int> orb;
        for (int g = 0; g < gamma_.size(); g++)
            orb.insert(act(g, x));
        std::vector<int> v(orb.begin(), orb.end());
        for (int y : v) done[y] = true;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<int> GroupAction::stabilizer(int x) const
{
    std::vector<int> out;
    for (int g = 0; g < gamma_.size(); g++)
        if (act(g, x) == x)
            out.push_back(g);
    return out;
}

namespace {

struct LocalStab {
    SubgroupView sub;
    std::vector<int> local_of; // ambient -> local, -1 outside
};

LocalStab local_stabilizer(const GroupAction& a, int x)
{
    LocalStab ls;
    ls.sub = a.group().subgroup_group(a.stabilizer(x));
    ls.local_of.assign(a.group().size(), -1);
    for (size_t i = 0; i < ls.sub.elements.size(); i++)
        ls.local_of[ls.sub.elements[i]] = static_cast<int>(i);
    return ls;
}

// scalar of conjugation by the basis unit T_h in C[G, kappa]
int basis_conjugation_scalar(const FiniteGroup& g, const Cocycle& k, int h, int s)
{
    int m = k.modulus;
    int hs = g.mul(h, s);
    long long v = k.at(h, s) + k.at(hs, g.inv(h)) - k.at(h, g.inv(h));
    return static_cast<int>(((v % m) + m) % m);
}

} // namespace

std::vector<Violation> validate(const GroupAction& a, const TwistedQuotientData& d)
{
    std::vector<Violation> out;
    int n = a.group().size();
    int k = a.npoints();
    int m = d.modulus;

    std::vector<LocalStab> stabs;
    for (int x = 0; x < k; x++)
        stabs.push_back(local_stabilizer(a, x));

    if (static_cast<int>(d.kappa.size()) != k ||
        static_cast<int>(d.theta.size()) != n ||
        static_cast<int>(d.coh_witness.size()) != n) {
        out.push_back({0, -1, -1, "data tables have wrong shape"});
        return out;
    }
    for (int x = 0; x < k; x++)
        if (!validate_cocycle(stabs[x].sub.group, d.kappa[x]) ||
            d.kappa[x].modulus != m)
            out.push_back({0, -1, x, "kappa is not a normalized cocycle"});
    if (!out.empty())
        return out;

    for (int g = 0; g < n; g++)
        for (int x = 0; x < k; x++) {
            int y = a.act(g, x);
            const auto& sx = stabs[x];
            const auto& sy = stabs[y];
            const ThetaMap& th = d.theta[g][x];
            int sz = sx.sub.group.size();
            if (static_cast<int>(th.map.size()) != sz ||
                static_cast<int>(th.corr.size()) != sz) {
                out.push_back({0, g, x, "theta has wrong size"});
                continue;
            }
            bool iso = true;
            std::vector<bool> hit(sy.sub.group.size(), false);
            for (int s = 0; s < sz && iso; s++) {
                if (th.map[s] < 0 || th.map[s] >= sy.sub.group.size())
                    iso = false;
                else if (hit[th.map[s]])
                    iso = false;
                else
                    hit[th.map[s]] = true;
            }
            if (iso && sz != sy.sub.group.size())
                iso = false;
            if (iso && th.map[0] != 0)
                iso = false;
            for (int s = 0; s < sz && iso; s++)
                for (int t = 0; t < sz && iso; t++)
                    if (th.map[sx.sub.group.mul(s, t)] !=
                        sy.sub.group.mul(th.map[s], th.map[t]))
                        iso = false;
            if (!iso) {
                out.push_back({0, g, x, "theta is not a group isomorphism"});
                continue;
            }
            // algebra isomorphism scalar condition
            for (int s = 0; s < sz; s++)
                for (int t = 0; t < sz; t++) {
                    int st = sx.sub.group.mul(s, t);
                    long long lhs = d.kappa[x].at(s, t) + th.corr[st];
                    long long rhs = th.corr[s] + th.corr[t] +
                                    d.kappa[y].at(th.map[s], th.map[t]);
                    if (((lhs - rhs) % m + m) % m != 0) {
                        out.push_back({0, g, x, "theta does not respect the twist"});
                        s = sz;
                        break;
                    }
                }
            // condition (1): kappa_{gx} cohomologous to g_*(kappa_x)
            const auto& eta = d.coh_witness[g][x];
            if (static_cast<int>(eta.size()) != sy.sub.group.size()) {
                out.push_back({1, g, x, "cohomology witness has wrong size"});
                continue;
            }
            bool ok1 = ((eta[0] % m) + m) % m == 0;
            for (int u = 0; u < sy.sub.group.size() && ok1; u++)
                for (int v = 0; v < sy.sub.group.size() && ok1; v++) {
                    int gu = sx.local_of[a.group().mul(
                        a.group().mul(a.group().inv(g), sy.sub.elements[u]), g)];
                    int gv = sx.local_of[a.group().mul(
                        a.group().mul(a.group().inv(g), sy.sub.elements[v]), g)];
                    long long diff = d.kappa[y].at(u, v) - d.kappa[x].at(gu, gv);
                    long long bdry =
                        eta[u] + eta[v] - eta[sy.sub.group.mul(u, v)];
                    if (((diff - bdry) % m + m) % m != 0)
                        ok1 = false;
                }
            if (!ok1)
                out.push_back({1, g, x, "kappa_{gx} is not cohomologous to g_*(kappa_x) via the witness"});
            // condition (2): inner for g in the stabilizer
            if (y == x) {
                auto it = d.inner_witness.find({g, x});
                if (it == d.inner_witness.end()) {
                    out.push_back({2, g, x, "missing inner witness"});
                } else {
                    int h = it->second;
                    bool ok2 = h >= 0 && h < sz;
                    for (int s = 0; s < sz && ok2; s++) {
                        int conj = sx.sub.group.mul(sx.sub.group.mul(h, s),
                                                    sx.sub.group.inv(h));
                        if (th.map[s] != conj)
                            ok2 = false;
                        else if (th.corr[s] !=
                                 basis_conjugation_scalar(sx.sub.group, d.kappa[x], h, s))
                            ok2 = false;
                    }
                    if (!ok2)
                        out.push_back({2, g, x, "theta is not conjugation by the witness unit"});
                }
            }
        }

    // condition (3): exact composition
    for (int g1 = 0; g1 < n; g1++)
        for (int g2 = 0; g2 < n; g2++)
            for (int x = 0; x < k; x++) {
                int y = a.act(g1, x);
                const ThetaMap& first = d.theta[g1][x];
                const ThetaMap& second = d.theta[g2][y];
                const ThetaMap& direct = d.theta[a.group().mul(g2, g1)][x];
                int sz = static_cast<int>(first.map.size());
                bool ok = true;
                for (int s = 0; s < sz && ok; s++) {
                    if (second.map[first.map[s]] != direct.map[s])
                        ok = false;
                    long long c = first.corr[s] + second.corr[first.map[s]];
                    if (((c - direct.corr[s]) % m + m) % m != 0)
                        ok = false;
                }
                if (!ok) {
                    out.push_back({3, a.group().mul(g2, g1), x,
                                   "theta composition fails at (" + std::to_string(g2) +
                                       "," + std::to_string(g1) + ")"});
                }
            }
    return out;
}

TwistedQuotientData trivial_data(const GroupAction& a, int modulus)
{
    TwistedQuotientData d;
    d.modulus = modulus;
    int n = a.group().size();
    int k = a.npoints();
    std::vector<LocalStab> stabs;
    for (int x = 0; x < k; x++)
        stabs.push_back(local_stabilizer(a, x));
    for (int x = 0; x < k; x++)
        d.kappa.push_back(Cocycle::trivial(stabs[x].sub.group.size(), modulus));
    d.theta.assign(n, std::vector<ThetaMap>(k));
    d.coh_witness.assign(n, std::vector<std::vector<int>>(k));
    for (int g = 0; g < n; g++)
        for (int x = 0; x < k; x++) {
            int y = a.act(g, x);
            int sz = stabs[x].sub.group.size();
            ThetaMap th;
            th.map.resize(sz);
            th.corr.assign(sz, 0);
            for (int s = 0; s < sz; s++) {
                int ambient = stabs[x].sub.elements[s];
                int conj = a.group().mul(a.group().mul(g, ambient), a.group().inv(g));
                th.map[s] = stabs[y].local_of[conj];
            }
            d.theta[g][x] = std::move(th);
            d.coh_witness[g][x].assign(stabs[y].sub.group.size(), 0);
            if (y == x)
                d.inner_witness[{g, x}] = stabs[x].local_of[g];
        }
    return d;
}

TwistedQuotientData strict_from_basepoints(const GroupAction& a, int modulus,
                                           const std::vector<BasepointSpec>& specs)
{
    auto orbs = a.orbits();
    if (specs.size() != orbs.size())
        throw std::invalid_argument("strict_from_basepoints: one spec per orbit required");

    int n = a.group().size();
    int k = a.npoints();
    std::vector<LocalStab> stabs;
    for (int x = 0; x < k; x++)
        stabs.push_back(local_stabilizer(a, x));

    std::vector<int> lift(k, -1), base_of(k, -1);
    std::vector<const BasepointSpec*> spec_of(k, nullptr);
    for (size_t o = 0; o < orbs.size(); o++) {
        const auto& spec = specs[o];
        bool found = std::find(orbs[o].begin(), orbs[o].end(), spec.basepoint) != orbs[o].end();
        if (!found)
            throw std::invalid_argument("strict_from_basepoints: basepoint not in its orbit");
        if (!validate_cocycle(stabs[spec.basepoint].sub.group, spec.kappa0) ||
            spec.kappa0.modulus != modulus)
            throw std::invalid_argument("strict_from_basepoints: kappa0 invalid");
        for (int x : orbs[o]) {
            int s = spec.lifts.at(x);
            if (a.act(s, spec.basepoint) != x)
                throw std::invalid_argument("strict_from_basepoints: bad lift");
            lift[x] = s;
            base_of[x] = spec.basepoint;
            spec_of[x] = &spec;
        }
        if (lift[spec.basepoint] != 0)
            throw std::invalid_argument("strict_from_basepoints: basepoint lift must be the identity");
    }

    const FiniteGroup& G = a.group();
    TwistedQuotientData d;
    d.modulus = modulus;
    d.kappa.resize(k);
    // kappa_x(s,t) = kappa0(sigma^-1 s sigma, sigma^-1 t sigma)
    for (int x = 0; x < k; x++) {
        int b = base_of[x];
        int sg = lift[x];
        int sz = stabs[x].sub.group.size();
        Cocycle kx = Cocycle::trivial(sz, modulus);
        for (int s = 0; s < sz; s++)
            for (int t = 0; t < sz; t++) {
                int sa = stabs[x].sub.elements[s];
                int ta = stabs[x].sub.elements[t];
                int sb = stabs[b].local_of[G.mul(G.mul(G.inv(sg), sa), sg)];
                int tb = stabs[b].local_of[G.mul(G.mul(G.inv(sg), ta), sg)];
                kx.table[s][t] = spec_of[x]->kappa0.at(sb, tb);
            }
        d.kappa[x] = std::move(kx);
    }

    d.theta.assign(n, std::vector<ThetaMap>(k));
    d.coh_witness.assign(n, std::vector<std::vector<int>>(k));
    for (int g = 0; g < n; g++)
        for (int x = 0; x < k; x++) {
            int y = a.act(g, x);
            int b = base_of[x];
            int sz = stabs[x].sub.group.size();
            ThetaMap th;
            th.map.resize(sz);
            th.corr.assign(sz, 0);
            // theta(s) = sigma_y sigma_x^-1 s sigma_x sigma_y^-1
            int move = G.mul(lift[y], G.inv(lift[x]));
            for (int s = 0; s < sz; s++) {
                int sa = stabs[x].sub.elements[s];
                th.map[s] = stabs[y].local_of[G.mul(G.mul(move, sa), G.inv(move))];
            }
            d.theta[g][x] = std::move(th);

            // witness for condition (1): with d0 = sigma_y^-1 g sigma_x in the
            // basepoint stabilizer, eta(u) = scalar of conjugation by T_{d0}
            // at sigma_x^-1 g^-1 u g sigma_x
            int d0 = G.mul(G.mul(G.inv(lift[y]), g), lift[x]);
            const auto& bst = stabs[b];
            std::vector<int> eta(stabs[y].sub.group.size());
            int d0b = bst.local_of[d0];
            for (int u = 0; u < stabs[y].sub.group.size(); u++) {
                int ua = stabs[y].sub.elements[u];
                int arg = G.mul(G.mul(G.inv(lift[x]), G.mul(G.mul(G.inv(g), ua), g)),
                                lift[x]);
                eta[u] = basis_conjugation_scalar(bst.sub.group, spec_of[x]->kappa0,
                                                  d0b, bst.local_of[arg]);
            }
            d.coh_witness[g][x] = std::move(eta);
            if (y == x)
                d.inner_witness[{g, x}] = 0; // theta is the identity map
        }
    return d;
}

namespace {

struct PairSpace {
    std::vector<LocalStab> stabs;
    std::vector<TwistedIrreps> irr;
    std::vector<int> offset;
    int total = 0;
};

PairSpace make_pair_space(const GroupAction& a, const TwistedQuotientData& d)
{
    PairSpace ps;
    for (int x = 0; x < a.npoints(); x++) {
        ps.stabs.push_back(local_stabilizer(a, x));
        ps.irr.push_back(twisted_irreps(ps.stabs[x].sub.group, d.kappa[x]));
        ps.offset.push_back(ps.total);
        ps.total += ps.irr[x].count;
    }
    return ps;
}

// pair id of gamma . (x, r)
int transport_pair(const GroupAction& a, const TwistedQuotientData& d,
                   const PairSpace& ps, int g, int x, int r)
{
    int y = a.act(g, x);
    const ThetaMap& th = d.theta[g][x];
    int sz = ps.stabs[x].sub.group.size();
    // traces of rho o theta^{-1} on the target stabilizer
    std::vector<int> inv_map(sz);
    for (int s = 0; s < sz; s++)
        inv_map[th.map[s]] = s;
    std::vector<Cyclotomic> target(sz);
    for (int t = 0; t < sz; t++) {
        int s = inv_map[t];
        target[t] = Cyclotomic::root_of_unity(d.modulus, -th.corr[s]) *
                    ps.irr[x].element_traces[r][s];
    }
    for (int rp = 0; rp < ps.irr[y].count; rp++)
        if (ps.irr[y].element_traces[rp] == target)
            return ps.offset[y] + rp;
    throw std::logic_error("transport_pair: transported character not found");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a)
    {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<ExtendedQuotientPoint> points_from_orbits(
    const PairSpace& ps,
    const std::vector<std::vector<std::pair<int, int>>>& orbits)
{
    std::vector<ExtendedQuotientPoint> out;
    for (const auto& orb : orbits) {
        ExtendedQuotientPoint pt;
        bool first = true;
        for (auto [x, r] : orb) {
            const auto& sig = ps.irr[x].element_traces[r];
            if (first || x < pt.base_point ||
                (x == pt.base_point && sig < pt.signature)) {
                pt.base_point = x;
                pt.irrep = r;
                pt.degree = ps.irr[x].degrees[r];
                pt.signature = sig;
                first = false;
            }
        }
        pt.pair_orbit_size = static_cast<long long>(orb.size());
        out.push_back(std::move(pt));
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
        if (p.base_point != q.base_point) return p.base_point < q.base_point;
        return p.signature < q.signature;
    });
    return out;
}

// orbits of pairs under the listed group elements (which must be closed
// under the action being used)
std::vector<std::vector<std::pair<int, int>>> pair_orbits(
    const GroupAction& a, const TwistedQuotientData& d, const PairSpace& ps,
    const std::vector<int>& elements)
{
    UnionFind uf(ps.total);
    for (int g : elements)
        for (int x = 0; x < a.npoints(); x++)
            for (int r = 0; r < ps.irr[x].count; r++)
                uf.unite(ps.offset[x] + r, transport_pair(a, d, ps, g, x, r));
    std::map<int, std::vector<std::pair<int, int>>> groups;
    for (int x = 0; x < a.npoints(); x++)
        for (int r = 0; r < ps.irr[x].count; r++)
            groups[uf.find(ps.offset[x] + r)].push_back({x, r});
    std::vector<std::vector<std::pair<int, int>>> out;
    for (auto& [root, v] : groups)
        out.push_back(std::move(v));
    return out;
}

} // namespace

std::vector<ExtendedQuotientPoint> build(const GroupAction& a,
                                         const TwistedQuotientData& d)
{
    auto violations = validate(a, d);
    if (!violations.empty())
        throw std::invalid_argument("build: invalid twisted quotient data: " +
                                    violations[0].detail);
    PairSpace ps = make_pair_space(a, d);
    std::vector<int> all(a.group().size());
    std::iota(all.begin(), all.end(), 0);
    return points_from_orbits(ps, pair_orbits(a, d, ps, all));
}

long long plain_extended_quotient_size(const GroupAction& a)
{
    // ordinary characters with the conjugation action; independent of the
    // twisted machinery
    struct Entry {
        std::vector<int> class_of;          // ambient -> local class id
        std::vector<std::vector<Cyclotomic>> chars; // per irrep, per ambient stab element
        int offset;
    };
    std::vector<Entry> entries;
    int total = 0;
    const FiniteGroup& G = a.group();
    for (int x = 0; x < a.npoints(); x++) {
        auto sub = G.subgroup_group(a.stabilizer(x));
        auto tbl = character_table(sub.group);
        Entry e;
        e.class_of.assign(G.size(), -1);
        std::vector<int> local_class(sub.group.size());
        for (size_t c = 0; c < tbl.classes.size(); c++)
            for (int el : tbl.classes[c])
                local_class[el] = static_cast<int>(c);
        for (size_t i = 0; i < sub.elements.size(); i++)
            e.class_of[sub.elements[i]] = local_class[i];
        for (const auto& row : tbl.values) {
            std::vector<Cyclotomic> vals(G.size());
            for (int amb = 0; amb < G.size(); amb++)
                if (e.class_of[amb] >= 0)
                    vals[amb] = row[e.class_of[amb]];
            e.chars.push_back(std::move(vals));
        }
        e.offset = total;
        total += static_cast<int>(e.chars.size());
        entries.push_back(std::move(e));
    }

    UnionFind uf(total);
    for (int g = 0; g < G.size(); g++)
        for (int x = 0; x < a.npoints(); x++) {
            int y = a.act(g, x);
            for (size_t r = 0; r < entries[x].chars.size(); r++) {
                // chi'(t) = chi(g^-1 t g) on the stabilizer of y
                int target = -1;
                for (size_t rp = 0; rp < entries[y].chars.size(); rp++) {
                    bool match = true;
                    for (int amb = 0; amb < G.size() && match; amb++) {
                        if (entries[y].class_of[amb] < 0) continue;
                        int back = G.mul(G.mul(G.inv(g), amb), g);
                        if (entries[y].chars[rp][amb] != entries[x].chars[r][back])
                            match = false;
                    }
                    if (match) {
                        target = static_cast<int>(rp);
                        break;
                    }
                }
                if (target < 0)
                    throw std::logic_error("plain quotient: transported character missing");
                uf.unite(entries[x].offset + static_cast<int>(r),
                         entries[y].offset + target);
            }
        }
    std::set<int> roots;
    for (int i = 0; i < total; i++)
        roots.insert(uf.find(i));
    return static_cast<long long>(roots.size());
}

bool trivial_quotient_compare(const GroupAction& a)
{
    auto pts = build(a, trivial_data(a));
    return static_cast<long long>(pts.size()) == plain_extended_quotient_size(a);
}

std::vector<ExtendedQuotientPoint> two_step_quotient(
    const GroupAction& a, const std::vector<std::vector<int>>& blocks,
    const TwistedQuotientData& d)
{
    auto violations = validate(a, d);
    if (!violations.empty())
        throw std::invalid_argument("two_step_quotient: invalid data");

    // blocks must partition the point set
    std::vector<int> block_of(a.npoints(), -1);
    for (size_t b = 0; b < blocks.size(); b++)
        for (int x : blocks[b]) {
            if (x < 0 || x >= a.npoints() || block_of[x] >= 0)
                throw std::invalid_argument("two_step_quotient: not a partition");
            block_of[x] = static_cast<int>(b);
        }
    for (int x = 0; x < a.npoints(); x++)
        if (block_of[x] < 0)
            throw std::invalid_argument("two_step_quotient: not a partition");

    const FiniteGroup& G = a.group();
    // setwise stabilizers of the blocks and the precondition
    std::vector<std::vector<int>> block_stab(blocks.size());
    for (size_t b = 0; b < blocks.size(); b++) {
        for (int g = 0; g < G.size(); g++) {
            bool keeps = true;
            for (int x : blocks[b])
                if (block_of[a.act(g, x)] != static_cast<int>(b))
                    keeps = false;
            if (keeps)
                block_stab[b].push_back(g);
        }
        for (int x : blocks[b])
            for (int g : a.stabilizer(x))
                if (std::find(block_stab[b].begin(), block_stab[b].end(), g) ==
                    block_stab[b].end())
                    throw std::invalid_argument(
                        "two_step_quotient: stabilizer condition N_Gamma(X_i)_x = Gamma_x fails");
    }

    PairSpace ps = make_pair_space(a, d);

    // step one: orbits of pairs within each block under its setwise
    // stabilizer; these are the points of the blockwise quotients Y_i
    UnionFind block_uf(ps.total);
    for (size_t b = 0; b < blocks.size(); b++)
        for (int g : block_stab[b])
            for (int x : blocks[b])
                for (int r = 0; r < ps.irr[x].count; r++)
                    block_uf.unite(ps.offset[x] + r, transport_pair(a, d, ps, g, x, r));

    std::map<int, int> point_of_root;
    std::vector<std::vector<std::pair<int, int>>> block_points;
    std::vector<int> rep_pair; // a representative pair id per block point
    for (int x = 0; x < a.npoints(); x++)
        for (int r = 0; r < ps.irr[x].count; r++) {
            int root = block_uf.find(ps.offset[x] + r);
            auto it = point_of_root.find(root);
            if (it == point_of_root.end()) {
                point_of_root[root] = static_cast<int>(block_points.size());
                block_points.push_back({{x, r}});
                rep_pair.push_back(ps.offset[x] + r);
            } else {
                block_points[it->second].push_back({x, r});
            }
        }
    auto block_point_of_pair = [&](int pid) { return point_of_root.at(block_uf.find(pid)); };

    // step two: the ordinary Gamma-quotient of the disjoint union of the Y_i,
    // acting through representatives only
    UnionFind level2(static_cast<int>(block_points.size()));
    for (int g = 0; g < G.size(); g++)
        for (size_t p = 0; p < block_points.size(); p++) {
            int pid = rep_pair[p];
            int x = -1, r = -1;
            for (int xx = 0; xx < a.npoints(); xx++)
                if (pid >= ps.offset[xx] && pid < ps.offset[xx] + ps.irr[xx].count) {
                    x = xx;
                    r = pid - ps.offset[xx];
                }
            int img = transport_pair(a, d, ps, g, x, r);
            level2.unite(static_cast<int>(p), block_point_of_pair(img));
        }

    std::map<int, std::vector<std::pair<int, int>>> groups;
    for (size_t p = 0; p < block_points.size(); p++) {
        auto& dst = groups[level2.find(static_cast<int>(p))];
        dst.insert(dst.end(), block_points[p].begin(), block_points[p].end());
    }
    std::vector<std::vector<std::pair<int, int>>> orbs;
    for (auto& [root, v] : groups)
        orbs.push_back(std::move(v));
    return points_from_orbits(ps, orbs);
}

} // namespace springer
