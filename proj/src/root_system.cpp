#include "springer/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace springer {

std::vector<std::vector<int>> cartan_matrix(Family f, int rank)
{
    auto chain = [](int n) {
        std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; i++) c[i][i] = 2;
        for (int i = 0; i + 1 < n; i++) c[i][i + 1] = c[i + 1][i] = -1;
        return c;
    };
    switch (f) {
    case Family::A: {
        if (rank < 1) throw std::invalid_argument("cartan_matrix: rank");
        return chain(rank);
    }
    case Family::B: {
        if (rank < 1) throw std::invalid_argument("cartan_matrix: rank");
        auto c = chain(rank);
        if (rank >= 2) c[rank - 2][rank - 1] = -2; // last simple root short
        return c;
    }
    case Family::C: {
        if (rank < 1) throw std::invalid_argument("cartan_matrix: rank");
        auto c = chain(rank);
        if (rank >= 2) c[rank - 1][rank - 2] = -2; // last simple root long
        return c;
    }
    case Family::D: {
        if (rank < 2) throw std::invalid_argument("cartan_matrix: rank");
        auto c = chain(rank);
        // fork: both end nodes attach to node rank-3
        c[rank - 2][rank - 1] = c[rank - 1][rank - 2] = 0;
        if (rank >= 3) c[rank - 3][rank - 1] = c[rank - 1][rank - 3] = -1;
        return c;
    }
    case Family::E6:
    case Family::E7:
    case Family::E8: {
        int n = f == Family::E6 ? 6 : f == Family::E7 ? 7 : 8;
        std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; i++) c[i][i] = 2;
        // Bourbaki: chain 1-3-4-5-...-n, branch node 2 attached to 4
        auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
        link(0, 2);
        for (int i = 2; i + 1 < n; i++) link(i, i + 1);
        link(1, 3);
        return c;
    }
    case Family::F4: {
        auto c = chain(4);
        c[1][2] = -2; // alpha3, alpha4 short
        return c;
    }
    case Family::G2: {
        return {{2, -1}, {-3, 2}}; // alpha1 short
    }
    }
    throw std::invalid_argument("cartan_matrix: bad family");
}

int RootSystem::root_index(const std::vector<int>& coords) const
{
    auto it = index.find(coords);
    if (it == index.end())
        throw std::logic_error("root_index: not a root");
    return it->second;
}

int RootSystem::pair_with_coroot(int r, int j) const
{
    const auto& c = roots[r];
    int v = 0;
    for (int i = 0; i < rank; i++)
        v += c[i] * cartan[i][j];
    return v;
}

int RootSystem::reflect(int r, int j) const
{
    auto c = roots[r];
    c[j] -= pair_with_coroot(r, j);
    return root_index(c);
}

RootSystem make_root_system(Family f, int rank)
{
    RootSystem rs;
    rs.family = f;
    rs.cartan = cartan_matrix(f, rank);
    rs.rank = static_cast<int>(rs.cartan.size());
    rank = rs.rank;

    // close the simple roots under simple reflections
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < rank; i++) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    auto pair_coroot = [&](const std::vector<int>& c, int j) {
        int v = 0;
        for (int i = 0; i < rank; i++) v += c[i] * rs.cartan[i][j];
        return v;
    };
    while (!queue.empty()) {
        auto c = queue.back();
        queue.pop_back();
        for (int j = 0; j < rank; j++) {
            auto d = c;
            d[j] -= pair_coroot(c, j);
            if (seen.insert(d).second)
                queue.push_back(d);
        }
    }

    std::vector<std::vector<int>> pos;
    for (const auto& c : seen) {
        bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
        if (nonneg)
            pos.push_back(c);
    }
    // order positives by height then lexicographically
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.n_pos = static_cast<int>(pos.size());
    rs.roots = pos;
    for (const auto& c : pos) {
        auto n = c;
        for (int& x : n) x = -x;
        rs.roots.push_back(n);
    }
    for (int i = 0; i < rs.num_roots(); i++)
        rs.index[rs.roots[i]] = i;
    if (static_cast<int>(seen.size()) != rs.num_roots())
        throw std::logic_error("make_root_system: sign split failed");
    return rs;
}

namespace {

// classify one connected component of a sub-diagram
std::string component_type(const std::vector<std::vector<int>>& c,
                           const std::vector<int>& nodes)
{
    int n = static_cast<int>(nodes.size());
    if (n == 1)
        return "A1";

    int doubles = 0, triples = 0;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            if (i == j) continue;
            int m = c[nodes[i]][nodes[j]] * c[nodes[j]][nodes[i]];
            if (m > 0) {
                adj[i].push_back(j);
                if (i < j && m == 2) doubles++;
                if (i < j && m == 3) triples++;
            }
        }
    if (triples)
        return "G2";

    std::vector<int> degree(n);
    for (int i = 0; i < n; i++) degree[i] = static_cast<int>(adj[i].size());
    int branch = -1;
    for (int i = 0; i < n; i++)
        if (degree[i] == 3) branch = i;

    if (doubles) {
        if (n == 2)
            return "B2";
        // walk the chain; F4 has the double bond in the middle
        int u = -1, v = -1;
        for (int i = 0; i < n; i++)
            for (int j : adj[i])
                if (i < j && c[nodes[i]][nodes[j]] * c[nodes[j]][nodes[i]] == 2) {
                    u = i;
                    v = j;
                }
        // v short iff <alpha_u, alpha_v^vee> = -2
        if (c[nodes[u]][nodes[v]] != -2) std::swap(u, v);
        if (degree[u] == 2 && degree[v] == 2)
            return "F4";
        // short end node is a leaf -> B; long end node is a leaf -> C
        return degree[v] == 1 ? "B" + std::to_string(n) : "C" + std::to_string(n);
    }

    if (branch < 0)
        return "A" + std::to_string(n);

    // arm lengths from the branch node
    std::vector<int> arms;
    for (int s : adj[branch]) {
        int len = 1, prev = branch, cur = s;
        while (degree[cur] == 2) {
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            len++;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
        return "D" + std::to_string(n);
    return "E" + std::to_string(n);
}

} // namespace

std::string subset_type(const RootSystem& rs, const std::vector<int>& X)
{
    std::vector<bool> in(rs.rank, false);
    for (int x : X) {
        if (x < 0 || x >= rs.rank)
            throw std::invalid_argument("subset_type: node out of range");
        in[x] = true;
    }
    std::vector<bool> used(rs.rank, false);
    std::vector<std::string> parts;
    for (int s = 0; s < rs.rank; s++) {
        if (!in[s] || used[s]) continue;
        std::vector<int> comp{s};
        used[s] = true;
        for (size_t k = 0; k < comp.size(); k++)
            for (int j = 0; j < rs.rank; j++)
                if (in[j] && !used[j] && rs.cartan[comp[k]][j] != 0) {
                    used[j] = true;
                    comp.push_back(j);
                }
        parts.push_back(component_type(rs.cartan, comp));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (size_t i = 0; i < parts.size(); i++) {
        if (i) out += "+";
        out += parts[i];
    }
    return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs)
{
    std::vector<std::vector<int>> out;
    std::vector<int> perm(rs.rank, -1);
    std::vector<bool> used(rs.rank, false);
    auto ok = [&](int i) {
        for (int j = 0; j < i; j++) {
            if (rs.cartan[i][j] != rs.cartan[perm[i]][perm[j]]) return false;
            if (rs.cartan[j][i] != rs.cartan[perm[j]][perm[i]]) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == rs.rank) {
            out.push_back(perm);
            return;
        }
        for (int v = 0; v < rs.rank; v++) {
            if (used[v]) continue;
            perm[i] = v;
            if (ok(i)) {
                used[v] = true;
                self(self, i + 1);
                used[v] = false;
            }
        }
        perm[i] = -1;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace springer
