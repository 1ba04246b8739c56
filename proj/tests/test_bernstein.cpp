#include <doctest.h>

#include <numeric>
#include <random>

#include "springer/bernstein.hpp"
#include <stdexcept>

using namespace springer;

namespace {

Cocycle klein_cocycle()
{
    Cocycle k = Cocycle::trivial(4, 2);
    auto bit = [](int x, int which) { return which == 0 ? x / 2 : x % 2; };
    for (int a = 0; a < 4; a++)
        for (int b = 0; b < 4; b++)
            k.table[a][b] = (bit(a, 1) * bit(b, 0)) % 2;
    return k;
}

std::vector<std::vector<std::vector<int>>> identity_matrices(int n, int rank)
{
    std::vector<std::vector<int>> id(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; i++) id[i][i] = 1;
    return std::vector<std::vector<std::vector<int>>>(n, id);
}

// one fixed label, trivial W_M-action, Klein four W_M
CatalogEntry klein_entry()
{
    CatalogEntry e;
    e.levi_id = "M0";
    e.lattice_rank = 1;
    e.wm = FiniteGroup::klein_four();
    e.matrices = identity_matrices(4, 1);
    e.action = {{0}, {0}, {0}, {0}};
    CatalogLabel lab;
    lab.name = "s0";
    lab.char_tag = "omega";
    lab.isotropy.modulus = 1;
    lab.kappa = klein_cocycle();
    e.labels.push_back(lab);
    return e;
}

// S2 acting on the rank-1 lattice by negation, two swapped labels
CatalogEntry negation_entry()
{
    CatalogEntry e;
    e.levi_id = "M1";
    e.lattice_rank = 1;
    e.wm = FiniteGroup::cyclic(2);
    e.matrices = {{{1}}, {{-1}}};
    e.action = {{0, 1}, {1, 0}};
    for (const char* n : {"a", "b"}) {
        CatalogLabel lab;
        lab.name = n;
        lab.char_tag = "tag";
        lab.isotropy.modulus = 2;
        lab.isotropy.generators = {{1}};
        e.labels.push_back(lab);
    }
    return e;
}

} // namespace

TEST_CASE("catalog validation catches defects")
{
    auto e = klein_entry();
    validate_entry(e);

    auto bad = e;
    bad.matrices[1][0][0] = 2; // not multiplicative
    CHECK_THROWS_AS(validate_entry(bad), std::invalid_argument);

    auto bad2 = negation_entry();
    bad2.labels[1].char_tag = "different";
    CHECK_THROWS_AS(validate_entry(bad2), std::invalid_argument);

    auto bad3 = negation_entry();
    bad3.labels[1].isotropy.generators.clear(); // not equivariant
    CHECK_THROWS_AS(validate_entry(bad3), std::invalid_argument);

    auto bad4 = klein_entry();
    bad4.wt0 = {1}; // {0,1} is a subgroup and Klein four is abelian: fine
    validate_entry(bad4);
}

TEST_CASE("component description assembles isotropy and stabilizer")
{
    // trivial W_M, trivial isotropy: the acting group is trivial
    CatalogEntry e0;
    e0.levi_id = "T";
    e0.lattice_rank = 2;
    e0.wm = FiniteGroup::trivial();
    e0.matrices = identity_matrices(1, 2);
    e0.action = {{0}};
    CatalogLabel lab;
    lab.name = "s";
    lab.isotropy.modulus = 1;
    e0.labels.push_back(lab);
    validate_entry(e0);
    auto c0 = component_description(e0, 0);
    CHECK(c0.torus_rank == 2);
    CHECK(c0.acting_group.size() == 1);

    // S2 by negation on a fixed label
    CatalogEntry e1 = negation_entry();
    e1.action = {{0, 1}, {0, 1}}; // make both labels fixed instead
    // isotropy must now be invariant under negation: {0,1} mod 2 is
    validate_entry(e1);
    auto c1 = component_description(e1, 0);
    CHECK(c1.stabilizer_order == 2);
    CHECK(c1.isotropy_order == 2);
    CHECK(c1.acting_group.size() == 4);

    // isotropy Z/2 with trivial stabilizer
    CatalogEntry e2 = negation_entry();
    validate_entry(e2);
    auto c2 = component_description(e2, 0);
    CHECK(c2.stabilizer_order == 1);
    CHECK(c2.isotropy_order == 2);
    CHECK(c2.acting_group.size() == 2);
}

TEST_CASE("stabilizers expose the W_qt model")
{
    auto e = negation_entry();
    auto st = stabilizer_wqt(e, 0);
    CHECK(st.group.size() == 1); // swapped labels: trivial stabilizer

    auto f = klein_entry();
    f.wt0 = {1};
    auto st2 = stabilizer_wqt(f, 0);
    CHECK(st2.group.size() == 4);
    CHECK(st2.wt0_local == std::vector<int>{0, 1});

    // orbit-stabilizer: transitive action on 2 labels in negation_entry
    CHECK(e.wm.size() / st.group.size() == 2);
}

TEST_CASE("assemble_block on the Klein-four catalog")
{
    auto e = klein_entry();
    auto block = assemble_block(e, 0, klein_cocycle());
    REQUIRE(block.points.size() == 1);
    CHECK(block.points[0].point.degree == 2);
    CHECK(block.points[0].char_tag == "omega");
    CHECK(block.key == "M0/s0");
}

TEST_CASE("free orbits give one point per orbit")
{
    auto e = negation_entry();
    auto st = stabilizer_wqt(e, 0);
    auto block = assemble_block(e, 0, Cocycle::trivial(st.group.size(), 1));
    CHECK(block.points.size() == 1);
    CHECK(block.points[0].char_tag == "tag");
}

TEST_CASE("singleton orbit with trivial cocycle gives Irr of the stabilizer")
{
    CatalogEntry e;
    e.levi_id = "M2";
    e.lattice_rank = 1;
    e.wm = FiniteGroup::symmetric(3);
    e.matrices = identity_matrices(6, 1);
    e.action.assign(6, {0});
    CatalogLabel lab;
    lab.name = "fix";
    lab.isotropy.modulus = 1;
    e.labels.push_back(lab);
    validate_entry(e);
    auto block = assemble_block(e, 0, Cocycle::trivial(6, 1));
    CHECK(block.points.size() == 3); // Irr(S3)
}

TEST_CASE("assemble_all keys blocks and preserves tags")
{
    std::vector<CatalogEntry> catalog{klein_entry(), negation_entry()};
    auto blocks = assemble_all(catalog);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].key == "M0/s0");
    CHECK(blocks[1].key == "M1/a");
    for (const auto& b : blocks)
        for (const auto& p : b.points)
            CHECK_FALSE(p.char_tag.empty());

    // duplicate keys are rejected
    std::vector<CatalogEntry> dup{klein_entry(), klein_entry()};
    CHECK_THROWS_AS(assemble_all(dup), std::invalid_argument);

    // empty catalog: empty union
    CHECK(assemble_all({}).empty());

    // cardinalities add across independent entries
    size_t total = 0;
    for (const auto& b : blocks)
        total += b.points.size();
    size_t separate = assemble_all({klein_entry()})[0].points.size() +
                      assemble_all({negation_entry()})[0].points.size();
    CHECK(total == separate);
}

TEST_CASE("grouped assembly agrees with the per-orbit union")
{
    // one entry whose label set has two orbits
    CatalogEntry e;
    e.levi_id = "M3";
    e.lattice_rank = 1;
    e.wm = FiniteGroup::cyclic(2);
    e.matrices = {{{1}}, {{1}}};
    e.action = {{0, 1, 2}, {1, 0, 2}}; // swap a,b; fix c
    for (const char* n : {"a", "b", "c"}) {
        CatalogLabel lab;
        lab.name = n;
        lab.char_tag = std::string("t_") + (n[0] == 'c' ? "c" : "ab");
        lab.isotropy.modulus = 1;
        e.labels.push_back(lab);
    }
    validate_entry(e);

    auto grouped = assemble_entry_grouped(e);
    size_t union_count = 0;
    for (const auto& b : assemble_all({e}))
        union_count += b.points.size();
    CHECK(grouped.size() == union_count);
    // swapped orbit contributes 1 point, the fixed label contributes Irr(Z2)=2
    CHECK(grouped.size() == 3);
    for (const auto& p : grouped)
        CHECK_FALSE(p.char_tag.empty());
}

namespace {

CatalogEntry random_entry(std::mt19937& rng, int idx)
{
    // W_M in {Z2, Z2xZ2, S3}; label sets assembled from fixed points and
    // swapped pairs; per-label cup-product cocycles
    CatalogEntry e;
    e.levi_id = "L" + std::to_string(idx);
    e.lattice_rank = 1 + static_cast<int>(rng() % 2);
    int which = static_cast<int>(rng() % 3);
    e.wm = which == 0 ? FiniteGroup::cyclic(2)
         : which == 1 ? FiniteGroup::klein_four()
                      : FiniteGroup::symmetric(3);
    e.matrices = identity_matrices(e.wm.size(), e.lattice_rank);

    int nfix = 1 + static_cast<int>(rng() % 2);
    int npair = which == 0 ? static_cast<int>(rng() % 2) : 0;
    int k = nfix + 2 * npair;
    e.action.assign(e.wm.size(), std::vector<int>(k));
    for (int g = 0; g < e.wm.size(); g++)
        for (int x = 0; x < nfix; x++)
            e.action[g][x] = x;
    for (int p = 0; p < npair; p++) {
        int a = nfix + 2 * p, b = a + 1;
        for (int g = 0; g < e.wm.size(); g++) {
            bool swap = (g == 1); // Z2 generator swaps
            e.action[g][a] = swap ? b : a;
            e.action[g][b] = swap ? a : b;
        }
    }
    for (int x = 0; x < k; x++) {
        CatalogLabel lab;
        lab.name = "s" + std::to_string(x);
        // tags and isotropy data must be constant along orbits
        int orbit_id = x < nfix ? x : nfix + (x - nfix) / 2;
        lab.char_tag = "chi" + std::to_string(orbit_id % 3);
        if (rng() % 2)
            lab.shift_tag = "z" + std::to_string(rng() % 2);
        lab.isotropy.modulus = 1 + static_cast<int>(rng() % 2);
        if (lab.isotropy.modulus > 1)
            lab.isotropy.generators = {std::vector<int>(e.lattice_rank, 1)};
        e.labels.push_back(lab);
    }
    for (int p = 0; p < npair; p++) {
        e.labels[nfix + 2 * p + 1].shift_tag = e.labels[nfix + 2 * p].shift_tag;
        e.labels[nfix + 2 * p + 1].isotropy = e.labels[nfix + 2 * p].isotropy;
    }

    // attach a cocycle on some fixed labels
    for (int x = 0; x < nfix; x++) {
        if (rng() % 2) continue;
        auto homs = homs_to_cyclic(e.wm, 2);
        const auto& f = homs[rng() % homs.size()];
        const auto& h = homs[rng() % homs.size()];
        e.labels[x].kappa = cup_product_cocycle(e.wm, f, h, 2);
    }
    return e;
}

} // namespace

TEST_CASE("random catalogs preserve tags everywhere")
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 40; trial++) {
        auto e = random_entry(rng, trial);
        validate_entry(e);
        auto act = entry_action(e);
        for (const auto& orb : act.orbits()) {
            Cocycle k = e.labels[orb[0]].kappa
                            ? *e.labels[orb[0]].kappa
                            : Cocycle::trivial(
                                  static_cast<int>(act.stabilizer(orb[0]).size()));
            auto block = assemble_block(e, orb[0], k);
            for (const auto& p : block.points) {
                CHECK(p.char_tag == e.labels[orb[0]].char_tag);
                CHECK(p.shift_tag == e.labels[orb[0]].shift_tag);
            }
            // block cardinality equals the twisted irreducible count at the
            // orbit representative
            auto st = e.wm.subgroup_group(act.stabilizer(orb[0]));
            Cocycle kk = k;
            if (kk.size() != st.group.size())
                continue;
            auto tw = twisted_irreps(st.group, kk);
            CHECK(static_cast<int>(block.points.size()) == tw.count);
        }
        // grouped assembly matches the union on every entry
        size_t union_count = 0;
        for (const auto& b : assemble_all({e}))
            union_count += b.points.size();
        CHECK(assemble_entry_grouped(e).size() == union_count);
    }
}

TEST_CASE("conjugate labels have isomorphic acting groups")
{
    auto e = negation_entry();
    auto c0 = component_description(e, 0);
    auto c1 = component_description(e, 1);
    CHECK(c0.acting_group.isomorphic_to(c1.acting_group));
}

TEST_CASE("assembling from a non-representative label transports the cocycle")
{
    // Klein four acting through its quotient Z2 on two labels: the
    // stabilizers are the order-2 subgroup {0,1} at both points
    CatalogEntry e;
    e.levi_id = "M4";
    e.lattice_rank = 1;
    e.wm = FiniteGroup::klein_four();
    e.matrices = identity_matrices(4, 1);
    // elements 0,1 fix; 2,3 swap (indices: (x,y) -> x*2+y, swap by x-bit)
    e.action = {{0, 1}, {0, 1}, {1, 0}, {1, 0}};
    for (const char* n : {"p", "q"}) {
        CatalogLabel lab;
        lab.name = n;
        lab.char_tag = "c";
        lab.isotropy.modulus = 1;
        e.labels.push_back(lab);
    }
    validate_entry(e);

    auto st1 = stabilizer_wqt(e, 1);
    REQUIRE(st1.group.size() == 2);
    Cocycle k = Cocycle::trivial(2, 2);
    k.table[1][1] = 1; // T_b^2 = -1 on the stabilizer of label q
    REQUIRE(validate_cocycle(st1.group, k));

    auto block_q = assemble_block(e, 1, k);
    auto block_p = assemble_block(e, 0, k); // same table holds at p by symmetry
    CHECK(block_q.points.size() == block_p.points.size());
    CHECK(block_q.key == block_p.key); // both orbits are the same block
    // C[Z2, kappa] has two one-dimensional modules; the swap glues the two
    // points' copies together pairwise
    CHECK(block_q.points.size() == 2);
    for (const auto& p : block_q.points)
        CHECK(p.point.degree == 1);
}
