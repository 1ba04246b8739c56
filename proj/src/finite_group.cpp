#include "springer/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace springer {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table)
{
    FiniteGroup g;
    g.n_ = static_cast<int>(table.size());
    if (g.n_ == 0)
        throw std::invalid_argument("from_table: empty table");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != g.n_)
            throw std::invalid_argument("from_table: table not square");
    for (const auto& row : table)
        for (int v : row)
            if (v < 0 || v >= g.n_)
                throw std::invalid_argument("from_table: entry out of range");
    for (int a = 0; a < g.n_; a++)
        if (table[0][a] != a || table[a][0] != a)
            throw std::invalid_argument("from_table: 0 is not an identity");
    for (int a = 0; a < g.n_; a++)
        for (int b = 0; b < g.n_; b++)
            for (int c = 0; c < g.n_; c++)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("from_table: not associative");
    g.inv_.assign(g.n_, -1);
    for (int a = 0; a < g.n_; a++)
        for (int b = 0; b < g.n_; b++)
            if (table[a][b] == 0)
                g.inv_[a] = b;
    for (int a = 0; a < g.n_; a++)
        if (g.inv_[a] < 0)
            throw std::invalid_argument("from_table: missing inverse");
    g.table_ = std::move(table);
    return g;
}

FiniteGroup FiniteGroup::from_permutations(int degree,
                                           const std::vector<std::vector<int>>& generators)
{
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree)
            throw std::invalid_argument("from_permutations: wrong degree");
        auto q = p;
        std::sort(q.begin(), q.end());
        if (q != id)
            throw std::invalid_argument("from_permutations: not a permutation");
    }
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{id};
    index[id] = 0;
    for (size_t i = 0; i < elems.size(); i++) {
        for (const auto& gen : generators) {
            std::vector<int> c(degree);
            for (int k = 0; k < degree; k++)
                c[k] = elems[i][gen[k]];
            if (index.emplace(c, elems.size()).second)
                elems.push_back(c);
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            std::vector<int> c(degree);
            for (int k = 0; k < degree; k++)
                c[k] = elems[a][elems[b][k]];
            table[a][b] = index.at(c);
        }
    return from_table(std::move(table));
}

FiniteGroup FiniteGroup::trivial()
{
    return from_table({{0}});
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    if (n < 1)
        throw std::invalid_argument("cyclic: n >= 1 required");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            t[a][b] = (a + b) % n;
    return from_table(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n)
{
    if (n < 1)
        throw std::invalid_argument("symmetric: n >= 1 required");
    if (n == 1)
        return trivial();
    std::vector<std::vector<int>> gens;
    for (int i = 0; i + 1 < n; i++) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[i], p[i + 1]);
        gens.push_back(p);
    }
    return from_permutations(n, gens);
}

FiniteGroup FiniteGroup::alternating(int n)
{
    if (n < 3)
        return trivial();
    std::vector<std::vector<int>> gens;
    for (int i = 0; i + 2 < n; i++) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        int a = i, b = i + 1, c = i + 2;
        p[a] = b; p[b] = c; p[c] = a;
        gens.push_back(p);
    }
    return from_permutations(n, gens);
}

FiniteGroup FiniteGroup::dihedral(int n)
{
    if (n < 1)
        throw std::invalid_argument("dihedral: n >= 1 required");
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; i++) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return from_permutations(n, {rot, refl});
}

FiniteGroup FiniteGroup::quaternion8()
{
    // indices: 1, -1, i, -i, j, -j, k, -k
    auto idx = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    // axis 0 = 1, 1 = i, 2 = j, 3 = k
    auto mul = [&](int a, int b, int& sign, int& axis) {
        static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        axis = ax[a][b];
        sign = sg[a][b];
    };
    for (int a = 0; a < 8; a++)
        for (int b = 0; b < 8; b++) {
            int sa = a % 2 ? -1 : 1, xa = a / 2;
            int sb = b % 2 ? -1 : 1, xb = b / 2;
            int sign, axis;
            mul(xa, xb, sign, axis);
            t[a][b] = idx(sa * sb * sign, axis);
        }
    return from_table(std::move(t));
}

FiniteGroup FiniteGroup::klein_four()
{
    return product(cyclic(2), cyclic(2));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b)
{
    int n = a.size() * b.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    auto idx = [&](int x, int y) { return x * b.size() + y; };
    for (int x1 = 0; x1 < a.size(); x1++)
        for (int y1 = 0; y1 < b.size(); y1++)
            for (int x2 = 0; x2 < a.size(); x2++)
                for (int y2 = 0; y2 < b.size(); y2++)
                    t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    return from_table(std::move(t));
}

int FiniteGroup::order_of(int a) const
{
    int o = 1, c = a;
    while (c != 0) {
        c = mul(c, a);
        o++;
    }
    return o;
}

int FiniteGroup::exponent() const
{
    long long e = 1;
    for (int a = 0; a < n_; a++)
        e = std::lcm(e, static_cast<long long>(order_of(a)));
    return static_cast<int>(e);
}

bool FiniteGroup::abelian() const
{
    for (int a = 0; a < n_; a++)
        for (int b = a + 1; b < n_; b++)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

std::vector<int> FiniteGroup::closure(std::vector<int> gens) const
{
    std::set<int> seen{0};
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.back();
        queue.pop_back();
        for (int g : gens) {
            int c = mul(cur, g);
            if (seen.insert(c).second)
                queue.push_back(c);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<int> FiniteGroup::centralizer(int a) const
{
    std::vector<int> out;
    for (int b = 0; b < n_; b++)
        if (mul(a, b) == mul(b, a))
            out.push_back(b);
    return out;
}

std::vector<int> FiniteGroup::commutator_subgroup() const
{
    std::vector<int> comms;
    for (int a = 0; a < n_; a++)
        for (int b = 0; b < n_; b++)
            comms.push_back(mul(mul(a, b), mul(inv_[a], inv_[b])));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return closure(comms);
}

std::vector<std::vector<int>> FiniteGroup::subgroups(int max_gens) const
{
    std::set<std::vector<int>> out;
    out.insert({0});
    std::vector<std::vector<int>> frontier{{0}};
    for (int round = 0; round < max_gens; round++) {
        std::vector<std::vector<int>> next;
        for (const auto& h : frontier)
            for (int g = 1; g < n_; g++) {
                auto gens = h;
                gens.push_back(g);
                auto c = closure(gens);
                if (out.insert(c).second)
                    next.push_back(c);
            }
        frontier = std::move(next);
        if (frontier.empty())
            break;
    }
    return {out.begin(), out.end()};
}

SubgroupView FiniteGroup::subgroup_group(const std::vector<int>& elements) const
{
    std::vector<int> elems = elements;
    std::sort(elems.begin(), elems.end());
    if (elems.empty() || elems[0] != 0)
        throw std::invalid_argument("subgroup_group: must contain the identity");
    std::map<int, int> local;
    for (size_t i = 0; i < elems.size(); i++)
        local[elems[i]] = static_cast<int>(i);
    int m = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; a++)
        for (int b = 0; b < m; b++) {
            auto it = local.find(mul(elems[a], elems[b]));
            if (it == local.end())
                throw std::invalid_argument("subgroup_group: set not closed");
            t[a][b] = it->second;
        }
    return {from_table(std::move(t)), elems};
}

bool FiniteGroup::isomorphic_to(const FiniteGroup& other) const
{
    if (n_ != other.n_)
        return false;
    // invariant screens first
    std::multiset<int> ord_a, ord_b;
    for (int i = 0; i < n_; i++) {
        ord_a.insert(order_of(i));
        ord_b.insert(other.order_of(i));
    }
    if (ord_a != ord_b)
        return false;

    // backtracking over generator images
    std::vector<int> gens;
    {
        std::set<int> span{0};
        while (static_cast<int>(span.size()) < n_) {
            int pick = -1;
            for (int g = 0; g < n_; g++)
                if (!span.count(g)) {
                    pick = g;
                    break;
                }
            gens.push_back(pick);
            auto c = closure(gens);
            span = std::set<int>(c.begin(), c.end());
        }
    }
    std::vector<int> map(n_, -1), used(other.n_, 0);
    map[0] = 0;
    used[0] = 1;

    // propagate products of mapped elements to a fixpoint; false on conflict
    auto propagate = [&](std::vector<int>& m, std::vector<int>& u) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n_; x++) {
                if (m[x] < 0) continue;
                for (int y = 0; y < n_; y++) {
                    if (m[y] < 0) continue;
                    int p = mul(x, y);
                    int q = other.mul(m[x], m[y]);
                    if (m[p] < 0) {
                        if (u[q]) return false;
                        m[p] = q;
                        u[q] = 1;
                        changed = true;
                    } else if (m[p] != q) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    auto extend = [&](auto&& self, size_t gi) -> bool {
        if (gi == gens.size()) {
            for (int x = 0; x < n_; x++)
                if (map[x] < 0)
                    return false;
            for (int x = 0; x < n_; x++)
                for (int y = 0; y < n_; y++)
                    if (map[mul(x, y)] != other.mul(map[x], map[y]))
                        return false;
            return true;
        }
        for (int img = 1; img < other.n_; img++) {
            if (used[img] || other.order_of(img) != order_of(gens[gi]))
                continue;
            auto trial_map = map;
            auto trial_used = used;
            trial_map[gens[gi]] = img;
            trial_used[img] = 1;
            if (!propagate(trial_map, trial_used))
                continue;
            std::swap(map, trial_map);
            std::swap(used, trial_used);
            if (self(self, gi + 1))
                return true;
            std::swap(map, trial_map);
            std::swap(used, trial_used);
        }
        return false;
    };
    return extend(extend, 0);
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g)
{
    std::vector<std::vector<int>> classes;
    std::vector<bool> done(g.size(), false);
    for (int a = 0; a < g.size(); a++) {
        if (done[a]) continue;
        std::set<int> cls;
        for (int x = 0; x < g.size(); x++)
            cls.insert(g.mul(g.mul(x, a), g.inv(x)));
        std::vector<int> v(cls.begin(), cls.end());
        for (int e : v) done[e] = true;
        classes.push_back(std::move(v));
    }
    return classes;
}

} // namespace springer
