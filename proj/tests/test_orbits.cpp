#include <doctest.h>

#include <map>

#include "springer/orbits.hpp"
#include <stdexcept>

using namespace springer;

TEST_CASE("orbit counts for the exceptional groups")
{
    CHECK(enumerate_orbits(make_group(Family::G2)).size() == 5);
    CHECK(enumerate_orbits(make_group(Family::F4)).size() == 16);
    CHECK(enumerate_orbits(make_group(Family::E6)).size() == 21);
    CHECK(enumerate_orbits(make_group(Family::E7)).size() == 45);
    CHECK(enumerate_orbits(make_group(Family::E8)).size() == 70);
}

TEST_CASE("classical enumeration splits very even partitions in type D")
{
    auto d2 = enumerate_orbits(make_group(Family::D, 2));
    int tagged = 0;
    for (const auto& o : d2) {
        const auto& c = std::get<ClassicalOrbit>(o);
        if (c.tag != VeryEvenTag::None) {
            tagged++;
            CHECK(c.partition == Partition({2, 2}));
        }
    }
    CHECK(tagged == 2);
    // partitions of 4 with even parts of even multiplicity: (3,1), (2,2), (1^4)
    CHECK(d2.size() == 4);

    auto a1 = enumerate_orbits(make_group(Family::A, 1));
    REQUIRE(a1.size() == 2);
    CHECK(std::get<ClassicalOrbit>(a1[0]).partition == Partition({2}));
    CHECK(std::get<ClassicalOrbit>(a1[1]).partition == Partition({1, 1}));

    // counts: |orbits| = |partitions| + #very even (type D only)
    for (int n = 2; n <= 8; n++) {
        auto parts = enumerate_partitions(n, Family::D);
        int ve = 0;
        for (const auto& p : parts)
            if (is_very_even(p)) ve++;
        CHECK(enumerate_orbits(make_group(Family::D, n)).size() == parts.size() + ve);
        CHECK(enumerate_orbits(make_group(Family::B, n)).size() ==
              enumerate_partitions(n, Family::B).size());
        CHECK(enumerate_orbits(make_group(Family::C, n)).size() ==
              enumerate_partitions(n, Family::C).size());
    }
}

TEST_CASE("classical component groups")
{
    auto cg = [](Family f, int rank, std::vector<int> parts,
                 VeryEvenTag tag = VeryEvenTag::None) {
        return component_group(make_group(f, rank),
                               ClassicalOrbit{Partition(parts), tag});
    };

    CHECK(cg(Family::A, 2, {3}) == ComponentGroup::cyclic(3));
    CHECK(cg(Family::A, 3, {2, 2}) == ComponentGroup::cyclic(2));
    CHECK(cg(Family::A, 3, {2, 1, 1}) == ComponentGroup::trivial());

    CHECK(cg(Family::C, 3, {1, 1, 1, 1, 1, 1}) == ComponentGroup::trivial());
    CHECK(cg(Family::C, 2, {2, 2}) == ComponentGroup::elem2(1));
    CHECK(cg(Family::C, 3, {4, 2}) == ComponentGroup::elem2(2));

    // B3, (3,3,1): odd part 3 repeats, a = 2
    CHECK(cg(Family::B, 3, {3, 3, 1}) == ComponentGroup::elem2(1));
    // regular orbit of B_n: all odd parts simple, a = 1
    CHECK(cg(Family::B, 2, {5}) == ComponentGroup::cyclic(2));
    CHECK(cg(Family::B, 3, {5, 1, 1}) == ComponentGroup::elem2(1));
    CHECK(cg(Family::B, 4, {5, 3, 1}).kind == ComponentGroup::Kind::CentralExt2);
    CHECK(cg(Family::B, 4, {5, 3, 1}).param == 2);

    // very even D partition: no odd parts, the multiplicity-one branch
    CHECK(cg(Family::D, 2, {2, 2}, VeryEvenTag::I) == ComponentGroup::cyclic(2));
    CHECK(cg(Family::D, 2, {2, 2}, VeryEvenTag::II) == ComponentGroup::cyclic(2));
    CHECK(cg(Family::D, 4, {5, 1, 1, 1}) == ComponentGroup::elem2(1));

    // tags agree across I/II for every very even partition
    for (int n = 2; n <= 6; n++)
        for (const auto& p : enumerate_partitions(n, Family::D))
            if (is_very_even(p))
                CHECK(component_group(make_group(Family::D, n),
                                      ClassicalOrbit{p, VeryEvenTag::I}) ==
                      component_group(make_group(Family::D, n),
                                      ClassicalOrbit{p, VeryEvenTag::II}));

    CHECK_THROWS_AS(cg(Family::C, 2, {3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cg(Family::B, 2, {4, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cg(Family::A, 2, {2, 2}), std::invalid_argument);
}

TEST_CASE("component groups depend only on family and partition stats")
{
    for (Family f : {Family::B, Family::C, Family::D})
        for (int n = 2; n <= 7; n++) {
            auto g = make_group(f, n);
            for (const auto& o : enumerate_orbits(g)) {
                auto c1 = component_group(g, o);
                auto c2 = component_group(g, o);
                CHECK(c1 == c2);
            }
        }
}

TEST_CASE("exceptional census matches the tabulated counts")
{
    using K = ComponentGroup;
    auto censify = [](Family f) {
        std::map<ComponentGroup, int> m;
        for (auto& [cg, c] : exceptional_census(make_group(f)))
            m[cg] = c;
        return m;
    };

    auto g2 = censify(Family::G2);
    CHECK(g2[K::trivial()] == 4);
    CHECK(g2[K::sym(3)] == 1);
    CHECK(g2.size() == 2);

    auto f4 = censify(Family::F4);
    CHECK(f4[K::trivial()] == 9);
    CHECK(f4[K::sym(2)] == 6);
    CHECK(f4[K::sym(4)] == 1);
    CHECK(f4.size() == 3);

    auto e6 = censify(Family::E6);
    CHECK(e6[K::trivial()] == 13);
    CHECK(e6[K::sym(2)] == 1);
    CHECK(e6[K::sym(3)] == 1);
    CHECK(e6[K::trivial().with_center(3)] == 5);
    CHECK(e6[K::sym(2).with_center(3)] == 1);
    CHECK(e6.size() == 5);

    auto e7 = censify(Family::E7);
    CHECK(e7[K::trivial()] == 17);
    CHECK(e7[K::sym(2)] == 8);
    CHECK(e7[K::sym(3)] == 1);
    CHECK(e7[K::trivial().with_center(2)] == 15);
    CHECK(e7[K::sym(2).with_center(2)] == 3);
    CHECK(e7[K::sym(3).with_center(2)] == 1);
    CHECK(e7.size() == 6);

    auto e8 = censify(Family::E8);
    CHECK(e8[K::trivial()] == 38);
    CHECK(e8[K::sym(2)] == 25);
    CHECK(e8[K::sym(3)] == 6);
    CHECK(e8[K::sym(5)] == 1);
    CHECK(e8.size() == 4);

    // census sums equal the orbit counts, and the per-orbit multiset is the census
    for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8}) {
        auto g = make_group(f);
        int total = 0;
        for (auto& [cg, c] : exceptional_census(g))
            total += c;
        auto orbits = enumerate_orbits(g);
        CHECK(total == static_cast<int>(orbits.size()));
        std::map<ComponentGroup, int> direct;
        for (const auto& o : orbits)
            direct[component_group(g, o)]++;
        CHECK(direct == censify(f));
    }
}

TEST_CASE("cuspidal orbits maximize the component group outside E6")
{
    // the flagged orbit is the unique one of maximal |A(O)| in types with
    // one cuspidal sheaf; in E6 the S3 orbit ties with the mu3 x S2 orbit
    for (Family f : {Family::G2, Family::F4, Family::E7, Family::E8}) {
        const auto& table = exceptional_orbit_table(f);
        long long best = 0;
        for (const auto& row : table)
            best = std::max(best, row.a_group.order());
        int at_max = 0;
        for (const auto& row : table) {
            if (row.a_group.order() == best) {
                at_max++;
                CHECK(row.cuspidal);
            } else {
                CHECK_FALSE(row.cuspidal);
            }
        }
        CHECK(at_max == 1);
    }
    int cuspidal_e6 = 0;
    for (const auto& row : exceptional_orbit_table(Family::E6))
        if (row.cuspidal) {
            cuspidal_e6++;
            CHECK(row.a_group == ComponentGroup::sym(2).with_center(3));
        }
    CHECK(cuspidal_e6 == 1);
}

TEST_CASE("exceptional lookup rejects bad input")
{
    CHECK_THROWS_AS(component_group(make_group(Family::E8), ExceptionalOrbit{"X9"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(exceptional_census(make_group(Family::B, 3)), std::invalid_argument);
    CHECK_THROWS_AS(make_group(Family::D, 1), std::invalid_argument);
}
