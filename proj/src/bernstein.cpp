#include "springer/bernstein.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace springer {

namespace {

int nlabels(const CatalogEntry& e)
{
    return static_cast<int>(e.labels.size());
}

std::vector<int> apply_matrix(const std::vector<std::vector<int>>& m,
                              const std::vector<int>& v, int mod)
{
    int r = static_cast<int>(m.size());
    std::vector<int> out(r, 0);
    for (int i = 0; i < r; i++) {
        long long acc = 0;
        for (int j = 0; j < r; j++)
            acc += static_cast<long long>(m[i][j]) * v[j];
        out[i] = static_cast<int>(((acc % mod) + mod) % mod);
    }
    return out;
}

// the finite subgroup of (Z/N)^rank generated by the isotropy vectors
std::vector<std::vector<int>> torsion_subgroup(const IsotropyData& iso, int rank)
{
    std::set<std::vector<int>> seen;
    std::vector<int> zero(rank, 0);
    seen.insert(zero);
    std::vector<std::vector<int>> queue{zero};
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        for (const auto& g : iso.generators) {
            auto w = v;
            for (int i = 0; i < rank; i++)
                w[i] = (w[i] + g[i]) % iso.modulus;
            if (seen.insert(w).second)
                queue.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

void validate_entry(const CatalogEntry& e)
{
    int n = e.wm.size();
    int r = e.lattice_rank;
    if (static_cast<int>(e.matrices.size()) != n)
        throw std::invalid_argument("catalog: one matrix per W_M element required");
    for (const auto& m : e.matrices) {
        if (static_cast<int>(m.size()) != r)
            throw std::invalid_argument("catalog: matrix rank mismatch");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != r)
                throw std::invalid_argument("catalog: matrix rank mismatch");
    }
    for (int i = 0; i < r; i++)
        for (int j = 0; j < r; j++)
            if (e.matrices[0][i][j] != (i == j ? 1 : 0))
                throw std::invalid_argument("catalog: identity matrix expected at index 0");
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            // matrices[a] * matrices[b] == matrices[a*b]
            for (int i = 0; i < r; i++)
                for (int j = 0; j < r; j++) {
                    long long acc = 0;
                    for (int l = 0; l < r; l++)
                        acc += static_cast<long long>(e.matrices[a][i][l]) *
                               e.matrices[b][l][j];
                    if (acc != e.matrices[e.wm.mul(a, b)][i][j])
                        throw std::invalid_argument("catalog: matrices not multiplicative");
                }
        }

    int k = nlabels(e);
    if (k < 1)
        throw std::invalid_argument("catalog: at least one label required");
    if (static_cast<int>(e.action.size()) != n)
        throw std::invalid_argument("catalog: action table has wrong number of rows");
    for (const auto& row : e.action) {
        if (static_cast<int>(row.size()) != k)
            throw std::invalid_argument("catalog: action row has wrong size");
        for (int v : row)
            if (v < 0 || v >= k)
                throw std::invalid_argument("catalog: action out of range");
    }
    for (int x = 0; x < k; x++)
        if (e.action[0][x] != x)
            throw std::invalid_argument("catalog: identity must act trivially on labels");
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            for (int x = 0; x < k; x++)
                if (e.action[e.wm.mul(a, b)][x] != e.action[a][e.action[b][x]])
                    throw std::invalid_argument("catalog: label action not compatible");

    for (const auto& l : e.labels) {
        if (l.isotropy.modulus < 1)
            throw std::invalid_argument("catalog: isotropy modulus must be positive");
        for (const auto& v : l.isotropy.generators)
            if (static_cast<int>(v.size()) != r)
                throw std::invalid_argument("catalog: isotropy vector rank mismatch");
    }

    // W_M-equivariance of isotropy, and tag invariance along orbits
    for (int g = 0; g < n; g++)
        for (int x = 0; x < k; x++) {
            int y = e.action[g][x];
            if (e.labels[x].isotropy.modulus != e.labels[y].isotropy.modulus)
                throw std::invalid_argument("catalog: isotropy modulus varies on an orbit");
            auto tx = torsion_subgroup(e.labels[x].isotropy, r);
            std::set<std::vector<int>> image;
            for (const auto& v : tx)
                image.insert(apply_matrix(e.matrices[g], v, e.labels[x].isotropy.modulus));
            auto ty = torsion_subgroup(e.labels[y].isotropy, r);
            if (image != std::set<std::vector<int>>(ty.begin(), ty.end()))
                throw std::invalid_argument("catalog: isotropy not W_M-equivariant");
            if (e.labels[x].char_tag != e.labels[y].char_tag)
                throw std::invalid_argument("catalog: char tag varies on an orbit");
            if (e.labels[x].shift_tag != e.labels[y].shift_tag)
                throw std::invalid_argument("catalog: shift tag varies on an orbit");
        }

    if (!e.wt0.empty()) {
        auto cl = e.wm.closure(e.wt0);
        std::set<int> sub(cl.begin(), cl.end());
        std::set<int> given(e.wt0.begin(), e.wt0.end());
        given.insert(0);
        if (sub != given)
            throw std::invalid_argument("catalog: wt0 is not a subgroup");
        for (int g = 0; g < n; g++)
            for (int h : sub)
                if (!sub.count(e.wm.mul(e.wm.mul(g, h), e.wm.inv(g))))
                    throw std::invalid_argument("catalog: wt0 is not normal");
    }
}

GroupAction entry_action(const CatalogEntry& e)
{
    return GroupAction::create(e.wm, nlabels(e), e.action);
}

ComponentDescription component_description(const CatalogEntry& e, int label)
{
    if (label < 0 || label >= nlabels(e))
        throw std::invalid_argument("component_description: label out of range");
    auto a = entry_action(e);
    auto stab = a.stabilizer(label);
    auto iso = torsion_subgroup(e.labels[label].isotropy, e.lattice_rank);
    int mod = e.labels[label].isotropy.modulus;

    std::map<std::vector<int>, int> iso_idx;
    for (size_t i = 0; i < iso.size(); i++)
        iso_idx[iso[i]] = static_cast<int>(i);
    int ni = static_cast<int>(iso.size());
    int ns = static_cast<int>(stab.size());

    // semidirect product (a, w)(b, v) = (a + w b, w v)
    auto idx = [&](int ai, int wi) { return ai * ns + wi; };
    std::vector<std::vector<int>> table(ni * ns, std::vector<int>(ni * ns));
    for (int ai = 0; ai < ni; ai++)
        for (int wi = 0; wi < ns; wi++)
            for (int bi = 0; bi < ni; bi++)
                for (int vi = 0; vi < ns; vi++) {
                    auto wb = apply_matrix(e.matrices[stab[wi]], iso[bi], mod);
                    auto sum = iso[ai];
                    for (int t = 0; t < e.lattice_rank; t++)
                        sum[t] = (sum[t] + wb[t]) % mod;
                    int wv = -1;
                    {
                        int prod = e.wm.mul(stab[wi], stab[vi]);
                        wv = static_cast<int>(
                            std::find(stab.begin(), stab.end(), prod) - stab.begin());
                    }
                    table[idx(ai, wi)][idx(bi, vi)] = idx(iso_idx.at(sum), wv);
                }

    ComponentDescription out;
    out.torus_rank = e.lattice_rank;
    out.acting_group = FiniteGroup::from_table(std::move(table));
    out.isotropy_order = ni;
    out.stabilizer_order = ns;
    out.description = "rank-" + std::to_string(e.lattice_rank) +
                      " torus / (isotropy " + std::to_string(ni) + " x| stabilizer " +
                      std::to_string(ns) + ")";
    return out;
}

StabilizerResult stabilizer_wqt(const CatalogEntry& e, int label)
{
    if (label < 0 || label >= nlabels(e))
        throw std::invalid_argument("stabilizer_wqt: label out of range");
    auto a = entry_action(e);
    auto sub = e.wm.subgroup_group(a.stabilizer(label));
    StabilizerResult out;
    out.elements = sub.elements;
    out.group = std::move(sub.group);
    if (!e.wt0.empty()) {
        std::set<int> marked(e.wt0.begin(), e.wt0.end());
        marked.insert(0);
        for (size_t i = 0; i < out.elements.size(); i++)
            if (marked.count(out.elements[i]))
                out.wt0_local.push_back(static_cast<int>(i));
    }
    return out;
}

namespace {

TwistedQuotientData data_from_label_cocycles(const GroupAction& a,
                                             const CatalogEntry& e)
{
    // orbit representatives: minimal label; lifts by first group element found
    auto orbs = a.orbits();
    std::vector<BasepointSpec> specs;
    int modulus = 1;
    for (const auto& orb : orbs)
        if (e.labels[orb[0]].kappa)
            modulus = std::lcm(modulus, e.labels[orb[0]].kappa->modulus);
    for (const auto& orb : orbs) {
        BasepointSpec spec;
        spec.basepoint = orb[0];
        int stab_size = static_cast<int>(a.stabilizer(orb[0]).size());
        if (e.labels[orb[0]].kappa) {
            const Cocycle& k0 = *e.labels[orb[0]].kappa;
            if (k0.size() != stab_size)
                throw std::invalid_argument(
                    "catalog: cocycle size does not match the stabilizer of " +
                    e.labels[orb[0]].name);
            spec.kappa0 = Cocycle::trivial(stab_size, modulus);
            for (int s = 0; s < stab_size; s++)
                for (int t = 0; t < stab_size; t++)
                    spec.kappa0.table[s][t] =
                        k0.table[s][t] * (modulus / k0.modulus);
        } else {
            spec.kappa0 = Cocycle::trivial(stab_size, modulus);
        }
        spec.lifts.assign(a.npoints(), -1);
        spec.lifts[orb[0]] = 0;
        for (int x : orb) {
            if (x == orb[0]) continue;
            for (int g = 0; g < a.group().size(); g++)
                if (a.act(g, orb[0]) == x) {
                    spec.lifts[x] = g;
                    break;
                }
        }
        specs.push_back(std::move(spec));
    }
    return strict_from_basepoints(a, modulus, specs);
}

} // namespace

TwistedQuotientData entry_data(const CatalogEntry& e)
{
    return data_from_label_cocycles(entry_action(e), e);
}

Block assemble_block(const CatalogEntry& e, int label, const Cocycle& kappa)
{
    validate_entry(e);
    auto full = entry_action(e);
    auto orbs = full.orbits();
    const std::vector<int>* orbit = nullptr;
    for (const auto& o : orbs)
        if (std::find(o.begin(), o.end(), label) != o.end())
            orbit = &o;
    if (!orbit)
        throw std::invalid_argument("assemble_block: label out of range");

    // restrict the action to the orbit
    std::vector<int> local_of(nlabels(e), -1);
    for (size_t i = 0; i < orbit->size(); i++)
        local_of[(*orbit)[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(e.wm.size(),
                                        std::vector<int>(orbit->size()));
    for (int g = 0; g < e.wm.size(); g++)
        for (size_t i = 0; i < orbit->size(); i++)
            table[g][i] = local_of[e.action[g][(*orbit)[i]]];
    auto act = GroupAction::create(e.wm, static_cast<int>(orbit->size()), table);

    // the cocycle is given on the stabilizer of `label`; rebase it at the
    // orbit's minimal point via a lift
    int rep_local = local_of[(*orbit)[0]];
    int label_local = local_of[label];
    BasepointSpec spec;
    spec.basepoint = rep_local;
    spec.lifts.assign(act.npoints(), -1);
    spec.lifts[rep_local] = 0;
    for (int x = 0; x < act.npoints(); x++) {
        if (x == rep_local) continue;
        for (int g = 0; g < e.wm.size(); g++)
            if (act.act(g, rep_local) == x) {
                spec.lifts[x] = g;
                break;
            }
    }
    if (label_local == rep_local) {
        spec.kappa0 = kappa;
    } else {
        // transport kappa from `label` to the representative along a lift
        int g = spec.lifts[label_local]; // g . rep = label
        auto stab_rep = act.stabilizer(rep_local);
        auto stab_lab = act.stabilizer(label_local);
        std::vector<int> lab_local_of(e.wm.size(), -1);
        for (size_t i = 0; i < stab_lab.size(); i++)
            lab_local_of[stab_lab[i]] = static_cast<int>(i);
        spec.kappa0 = Cocycle::trivial(static_cast<int>(stab_rep.size()), kappa.modulus);
        for (size_t s = 0; s < stab_rep.size(); s++)
            for (size_t t = 0; t < stab_rep.size(); t++) {
                int su = lab_local_of[e.wm.mul(e.wm.mul(g, stab_rep[s]), e.wm.inv(g))];
                int tu = lab_local_of[e.wm.mul(e.wm.mul(g, stab_rep[t]), e.wm.inv(g))];
                spec.kappa0.table[s][t] = kappa.at(su, tu);
            }
    }
    auto data = strict_from_basepoints(act, kappa.modulus, {spec});
    auto pts = build(act, data);

    Block out;
    out.key = e.levi_id + "/" + e.labels[(*orbit)[0]].name;
    for (auto& p : pts) {
        BlockPoint bp;
        bp.point = std::move(p);
        bp.label_name = e.labels[(*orbit)[0]].name;
        bp.char_tag = e.labels[(*orbit)[0]].char_tag;
        bp.shift_tag = e.labels[(*orbit)[0]].shift_tag;
        out.points.push_back(std::move(bp));
    }
    return out;
}

std::vector<Block> assemble_all(const std::vector<CatalogEntry>& catalog)
{
    std::vector<Block> out;
    std::set<std::string> keys;
    for (const auto& e : catalog) {
        validate_entry(e);
        auto act = entry_action(e);
        for (const auto& orb : act.orbits()) {
            Cocycle k = e.labels[orb[0]].kappa
                            ? *e.labels[orb[0]].kappa
                            : Cocycle::trivial(
                                  static_cast<int>(act.stabilizer(orb[0]).size()));
            Block b = assemble_block(e, orb[0], k);
            if (!keys.insert(b.key).second)
                throw std::invalid_argument("assemble_all: duplicate key " + b.key);
            out.push_back(std::move(b));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Block& a, const Block& b) { return a.key < b.key; });
    return out;
}

std::vector<BlockPoint> assemble_entry_grouped(const CatalogEntry& e)
{
    validate_entry(e);
    auto act = entry_action(e);
    auto data = entry_data(e);
    auto blocks = act.orbits();
    auto pts = two_step_quotient(act, blocks, data);
    std::vector<BlockPoint> out;
    for (auto& p : pts) {
        // tag from the orbit containing the base point
        const CatalogLabel* lab = nullptr;
        for (const auto& orb : blocks)
            if (std::find(orb.begin(), orb.end(), p.base_point) != orb.end())
                lab = &e.labels[orb[0]];
        BlockPoint bp;
        bp.point = std::move(p);
        bp.label_name = lab->name;
        bp.char_tag = lab->char_tag;
        bp.shift_tag = lab->shift_tag;
        out.push_back(std::move(bp));
    }
    return out;
}

} // namespace springer
