#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "springer/weyl.hpp"
#include <stdexcept>

using namespace springer;

namespace {

// independent double-coset count in S_n by direct permutation closure,
// avoiding the root-system machinery entirely
int sym_double_coset_count(int n, const std::vector<int>& gens_left,
                           const std::vector<int>& gens_right)
{
    // permutations of {0..n-1} encoded as vectors
    std::vector<std::vector<int>> all;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> idx;
    for (size_t i = 0; i < all.size(); i++)
        idx[all[i]] = static_cast<int>(i);

    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(n);
        for (int i = 0; i < n; i++)
            c[i] = a[b[i]];
        return c;
    };
    auto adjacent = [&](int i) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[i], t[i + 1]);
        return t;
    };

    std::vector<char> seen(all.size(), 0);
    int cosets = 0;
    for (size_t s = 0; s < all.size(); s++) {
        if (seen[s]) continue;
        cosets++;
        std::vector<int> stack{static_cast<int>(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int i : gens_left) {
                int j = idx[compose(adjacent(i), all[cur])];
                if (!seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
            }
            for (int i : gens_right) {
                int j = idx[compose(all[cur], adjacent(i))];
                if (!seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
            }
        }
    }
    return cosets;
}

// number of nonnegative integer matrices with given row and column sums
long long contingency_count(const std::vector<int>& rows, const std::vector<int>& cols)
{
    if (rows.empty())
        return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
    std::vector<int> rest(rows.begin() + 1, rows.end());
    long long total = 0;
    // distribute rows[0] over the columns
    std::vector<int> take(cols.size(), 0);
    auto rec = [&](auto&& self, size_t j, int remaining) -> void {
        if (j + 1 == cols.size()) {
            if (remaining > cols[j])
                return;
            take[j] = remaining;
            std::vector<int> newcols(cols);
            for (size_t t = 0; t < cols.size(); t++)
                newcols[t] -= take[t];
            total += contingency_count(rest, newcols);
            return;
        }
        for (int v = 0; v <= std::min(remaining, cols[j]); v++) {
            take[j] = v;
            self(self, j + 1, remaining - v);
        }
    };
    if (cols.empty())
        return rows[0] == 0 ? contingency_count(rest, cols) : 0;
    rec(rec, 0, rows[0]);
    return total;
}

// subsets of {0..n-1} from a bitmask
std::vector<int> subset(unsigned mask, int n)
{
    std::vector<int> X;
    for (int i = 0; i < n; i++)
        if (mask & (1u << i))
            X.push_back(i);
    return X;
}

// composition of n attached to a subset of the simple roots of A_{n-1}:
// the Levi GL-block sizes
std::vector<int> composition_of_subset(const std::vector<int>& X, int n)
{
    std::vector<bool> in(n - 1, false);
    for (int x : X) in[x] = true;
    std::vector<int> comp;
    int run = 1;
    for (int i = 0; i < n - 1; i++) {
        if (in[i]) {
            run++;
        } else {
            comp.push_back(run);
            run = 1;
        }
    }
    comp.push_back(run);
    return comp;
}

} // namespace

TEST_CASE("root systems have the expected sizes")
{
    auto npos = [](Family f, int r) {
        return make_root_system(f, r).n_pos;
    };
    CHECK(npos(Family::A, 3) == 6);
    CHECK(npos(Family::A, 5) == 15);
    CHECK(npos(Family::B, 3) == 9);
    CHECK(npos(Family::C, 3) == 9);
    CHECK(npos(Family::D, 4) == 12);
    CHECK(npos(Family::D, 2) == 2);
    CHECK(npos(Family::G2, 2) == 6);
    CHECK(npos(Family::F4, 4) == 24);
    CHECK(npos(Family::E6, 6) == 36);
}

TEST_CASE("subset type recognition")
{
    auto e6 = make_root_system(Family::E6, 6);
    CHECK(subset_type(e6, {0, 2, 4, 5}) == "A2+A2");
    CHECK(subset_type(e6, {0, 1, 2, 3, 4, 5}) == "E6");
    CHECK(subset_type(e6, {1, 2, 3, 4}) == "D4");
    auto f4 = make_root_system(Family::F4, 4);
    CHECK(subset_type(f4, {0, 1, 2}) == "B3");
    CHECK(subset_type(f4, {1, 2, 3}) == "C3");
    CHECK(subset_type(f4, {1, 2}) == "B2");
    CHECK(subset_type(f4, {0, 1, 2, 3}) == "F4");
    auto g2 = make_root_system(Family::G2, 2);
    CHECK(subset_type(g2, {0, 1}) == "G2");
    auto b4 = make_root_system(Family::B, 4);
    CHECK(subset_type(b4, {0, 1}) == "A2");
    CHECK(subset_type(b4, {2, 3}) == "B2");
    CHECK(subset_type(b4, {0, 2, 3}) == "A1+B2");
    auto e7 = make_root_system(Family::E7, 7);
    CHECK(subset_type(e7, {1, 4, 6}) == "A1+A1+A1");
}

TEST_CASE("Weyl group orders")
{
    CHECK(ExtendedWeylGroup(Family::A, 2).weyl_elements().size() == 6);
    CHECK(ExtendedWeylGroup(Family::A, 5).weyl_elements().size() == 720);
    CHECK(ExtendedWeylGroup(Family::B, 3).weyl_elements().size() == 48);
    CHECK(ExtendedWeylGroup(Family::C, 3).weyl_elements().size() == 48);
    CHECK(ExtendedWeylGroup(Family::D, 4).weyl_elements().size() == 192);
    CHECK(ExtendedWeylGroup(Family::G2, 2).weyl_elements().size() == 12);
    CHECK(ExtendedWeylGroup(Family::F4, 4).weyl_elements().size() == 1152);
    ExtendedWeylGroup e7(Family::E7, 7);
    CHECK_THROWS_AS(e7.weyl_elements(), std::domain_error);
}

TEST_CASE("diagram automorphism groups")
{
    CHECK(ExtendedWeylGroup(Family::A, 2, ExtendedWeylGroup::Pi0::Full).pi0_size() == 2);
    CHECK(ExtendedWeylGroup(Family::A, 1, ExtendedWeylGroup::Pi0::Full).pi0_size() == 1);
    CHECK(ExtendedWeylGroup(Family::D, 4, ExtendedWeylGroup::Pi0::Full).pi0_size() == 6);
    CHECK(ExtendedWeylGroup(Family::D, 5, ExtendedWeylGroup::Pi0::Full).pi0_size() == 2);
    CHECK(ExtendedWeylGroup(Family::E6, 6, ExtendedWeylGroup::Pi0::Full).pi0_size() == 2);
    CHECK(ExtendedWeylGroup(Family::F4, 4, ExtendedWeylGroup::Pi0::Full).pi0_size() == 1);
    CHECK(ExtendedWeylGroup(Family::D, 4, ExtendedWeylGroup::Pi0::Triality).pi0_size() == 3);
    CHECK(ExtendedWeylGroup(Family::A, 2, ExtendedWeylGroup::Pi0::Flip).pi0_size() == 2);
    CHECK_THROWS_AS(ExtendedWeylGroup(Family::B, 3, ExtendedWeylGroup::Pi0::Flip),
                    std::invalid_argument);
}

TEST_CASE("parabolic pairs of A2 with the flip")
{
    ExtendedWeylGroup g(Family::A, 2, ExtendedWeylGroup::Pi0::Flip);
    auto pairs = enumerate_parabolic_pairs(g);
    // stab(empty) = stab(full) = Z/2 (two subgroups each); singletons get one
    CHECK(pairs.size() == 6);
    int with_flip = 0;
    for (const auto& p : pairs)
        if (p.omega.size() == 2)
            with_flip++;
    CHECK(with_flip == 2);

    // trivial pi0: pairs are just the subsets
    ExtendedWeylGroup triv(Family::A, 2);
    CHECK(enumerate_parabolic_pairs(triv).size() == 4);
    ExtendedWeylGroup b3(Family::B, 3);
    CHECK(enumerate_parabolic_pairs(b3).size() == 8);
}

TEST_CASE("parabolic pairs of D4 with the full S3")
{
    ExtendedWeylGroup g(Family::D, 4, ExtendedWeylGroup::Pi0::Full);
    REQUIRE(g.pi0_size() == 6);
    // independent count: for each subset, the subgroups of its setwise
    // stabilizer inside S3 (S3 has 6 subgroups: 1, three Z/2, Z/3, S3)
    auto pairs = enumerate_parabolic_pairs(g);
    long long expect = 0;
    for (unsigned mask = 0; mask < 16; mask++) {
        auto X = subset(mask, 4);
        std::set<int> stab;
        for (int t = 0; t < 6; t++) {
            std::vector<int> img;
            for (int x : X) img.push_back(g.pi0_apply(t, x));
            std::sort(img.begin(), img.end());
            if (img == X)
                stab.insert(t);
        }
        // count subgroups of the stabilizer by brute force over subsets
        int cnt = 0;
        std::vector<int> st(stab.begin(), stab.end());
        for (unsigned m2 = 0; m2 < (1u << st.size()); m2++) {
            std::vector<int> elems;
            for (size_t i = 0; i < st.size(); i++)
                if (m2 & (1u << i)) elems.push_back(st[i]);
            if (elems.empty() || elems[0] != 0) continue;
            bool closed = true;
            for (int a : elems)
                for (int b : elems)
                    if (!std::binary_search(elems.begin(), elems.end(),
                                            g.pi0_mul(a, b)))
                        closed = false;
            if (closed) cnt++;
        }
        expect += cnt;
    }
    CHECK(static_cast<long long>(pairs.size()) == expect);

    // pi0-conjugacy classes partition the pairs
    auto classes = parabolic_pair_classes(g);
    size_t covered = 0;
    for (const auto& c : classes)
        covered += c.size();
    CHECK(covered == pairs.size());
}

TEST_CASE("quasi-Levi kernels")
{
    ExtendedWeylGroup g(Family::A, 2, ExtendedWeylGroup::Pi0::Flip);
    auto full = quasi_levi(g, {0, 1});
    CHECK(full.omega.size() == 2); // all of pi0
    auto torus = quasi_levi(g, {});
    CHECK(torus.omega == std::vector<int>{0});
    CHECK(torus.semisimple_type.empty());
    auto one = quasi_levi(g, {0});
    CHECK(one.omega == std::vector<int>{0});
    CHECK(one.semisimple_type == "A1");

    ExtendedWeylGroup d4(Family::D, 4, ExtendedWeylGroup::Pi0::Full);
    CHECK(quasi_levi(d4, {0, 1, 2, 3}).omega.size() == 6);
    // fixing all outer nodes pointwise forces the identity
    CHECK(quasi_levi(d4, {0}).omega == std::vector<int>{0});
    // X = the three outer nodes: any diagram automorphism fixes node 1
    auto outer = quasi_levi(d4, {0, 2, 3});
    CHECK(outer.omega.size() == 6);
    CHECK(outer.semisimple_type == "A1+A1+A1");
}

TEST_CASE("quasi-Levi bijection with Levi classes")
{
    for (auto spec : {std::pair{Family::A, 2}, std::pair{Family::D, 4}}) {
        ExtendedWeylGroup g(spec.first, spec.second,
                            spec.first == Family::A ? ExtendedWeylGroup::Pi0::Flip
                                                    : ExtendedWeylGroup::Pi0::Full);
        auto classes = levi_subset_classes(g);
        // one quasi-Levi label per W-class of subsets, and recovering X is exact
        std::set<std::vector<int>> labels;
        for (const auto& cls : classes) {
            auto l = quasi_levi(g, cls[0]);
            CHECK(l.X == cls[0]);
            labels.insert(l.X);
        }
        CHECK(labels.size() == classes.size());
        // distinct classes yield distinct labels and all subsets are covered
        size_t total = 0;
        for (const auto& cls : classes)
            total += cls.size();
        CHECK(total == (1u << g.rank()));
    }
}

TEST_CASE("double cosets in A2")
{
    ExtendedWeylGroup g(Family::A, 2);
    auto borel = double_cosets(g, {}, {});
    CHECK(borel.size() == 6);

    auto levi = double_cosets(g, {0}, {0});
    CHECK(levi.size() == 2);
    CHECK(contingency_count({2, 1}, {2, 1}) == 2);

    auto sizes = double_coset_sizes(g, {0}, {0});
    CHECK(std::accumulate(sizes.begin(), sizes.end(), 0LL) == 6);
}

TEST_CASE("double cosets against the independent S4 oracle")
{
    ExtendedWeylGroup g(Family::A, 3);
    for (unsigned m = 0; m < 8; m++)
        for (unsigned l = 0; l < 8; l++) {
            auto reps = double_cosets(g, subset(m, 3), subset(l, 3));
            int oracle = sym_double_coset_count(4, subset(m, 3), subset(l, 3));
            CHECK(static_cast<int>(reps.size()) == oracle);
        }
    // the specific instance: X_M = {a1}, X_L = {a2}
    auto reps = double_cosets(g, {0}, {1});
    CHECK(static_cast<int>(reps.size()) == sym_double_coset_count(4, {0}, {1}));
}

TEST_CASE("coset sizes partition the group and dims are monotone")
{
    for (auto [f, r] : {std::pair{Family::A, 3}, std::pair{Family::B, 3},
                        std::pair{Family::D, 4}, std::pair{Family::G2, 2}}) {
        ExtendedWeylGroup g(f, r);
        long long order = g.weyl_order();
        for (unsigned m = 0; m < (1u << r); m++)
            for (unsigned l = 0; l < (1u << r); l++) {
                auto X_M = subset(m, r);
                auto X_L = subset(l, r);
                auto reps = double_cosets(g, X_M, X_L);
                auto sizes = double_coset_sizes(g, X_M, X_L);
                CHECK(std::accumulate(sizes.begin(), sizes.end(), 0LL) == order);
                long long prev = -1;
                for (const auto& w : reps) {
                    long long d = dim_QwP(g, X_M, w, X_L);
                    CHECK(d >= prev);
                    prev = d;
                }
            }
    }
}

TEST_CASE("dim formula on small cases")
{
    ExtendedWeylGroup a1(Family::A, 1);
    auto reps = double_cosets(a1, {}, {});
    REQUIRE(reps.size() == 2);
    CHECK(dim_QwP(a1, {}, reps[0], {}) == 2); // the Borel
    CHECK(dim_QwP(a1, {}, reps[1], {}) == 3); // the big cell
    CHECK(a1.length(reps[0]) == 0);
    CHECK(a1.length(reps[1]) == 1);

    // the longest representative attains the maximal dimension (exhaustive,
    // small ranks)
    for (auto [f, r] : {std::pair{Family::A, 2}, std::pair{Family::A, 3},
                        std::pair{Family::B, 3}, std::pair{Family::G2, 2}}) {
        ExtendedWeylGroup g(f, r);
        for (unsigned m = 0; m < (1u << r); m++)
            for (unsigned l = 0; l < (1u << r); l++) {
                auto X_M = subset(m, r);
                auto X_L = subset(l, r);
                auto reps = double_cosets(g, X_M, X_L);
                int max_len = -1;
                long long dim_at_max = -1, max_dim = -1;
                for (const auto& w : reps) {
                    long long d = dim_QwP(g, X_M, w, X_L);
                    max_dim = std::max(max_dim, d);
                    if (g.length(w) > max_len) {
                        max_len = g.length(w);
                        dim_at_max = d;
                    }
                }
                CHECK(dim_at_max == max_dim);
            }
    }
}

TEST_CASE("Mackey terms for GL Levis count contingency matrices")
{
    for (int n = 2; n <= 5; n++) {
        ExtendedWeylGroup g(Family::A, n - 1);
        for (unsigned m = 0; m < (1u << (n - 1)); m++)
            for (unsigned l = 0; l < (1u << (n - 1)); l++) {
                ParabolicPair Q{subset(m, n - 1), {0}};
                ParabolicPair P{subset(l, n - 1), {0}};
                auto terms = mackey_terms(g, Q, P);
                auto rows = composition_of_subset(Q.X, n);
                auto cols = composition_of_subset(P.X, n);
                CHECK(static_cast<long long>(terms.size()) ==
                      contingency_count(rows, cols));
            }
    }
}

TEST_CASE("Mackey term structure in A2")
{
    ExtendedWeylGroup g(Family::A, 2);
    // P = Q = G: a single term with everything equal to G
    ParabolicPair full{{0, 1}, {0}};
    auto t_full = mackey_terms(g, full, full);
    REQUIRE(t_full.size() == 1);
    CHECK(t_full[0].levi_roots.size() == g.roots().num_roots());

    // P = Q = B: six terms, all with torus Levi
    ParabolicPair borel{{}, {0}};
    auto t_borel = mackey_terms(g, borel, borel);
    REQUIRE(t_borel.size() == 6);
    for (const auto& t : t_borel)
        CHECK(t.levi_roots.empty());

    // L = M = the {a1} Levi: two terms, (L,L,L) then the torus
    ParabolicPair levi{{0}, {0}};
    auto t_levi = mackey_terms(g, levi, levi);
    REQUIRE(t_levi.size() == 2);
    CHECK(t_levi[0].levi_roots.size() == 2); // +-alpha1
    CHECK(t_levi[0].parabolic_in_M.size() == 2);
    CHECK(t_levi[1].levi_roots.empty());
}

TEST_CASE("pi0 equivariance of enumerations")
{
    ExtendedWeylGroup g(Family::D, 4, ExtendedWeylGroup::Pi0::Full);
    for (int t = 0; t < g.pi0_size(); t++) {
        for (unsigned mask = 0; mask < 16; mask++) {
            auto X = subset(mask, 4);
            std::vector<int> tX;
            for (int x : X) tX.push_back(g.pi0_apply(t, x));
            std::sort(tX.begin(), tX.end());
            // quasi-Levi kernels transport: omega(tX) = t omega(X) t^-1
            auto a = quasi_levi(g, X);
            auto b = quasi_levi(g, tX);
            std::set<int> conj;
            for (int o : a.omega)
                conj.insert(g.pi0_mul(g.pi0_mul(t, o), g.pi0_inv(t)));
            CHECK(conj == std::set<int>(b.omega.begin(), b.omega.end()));
            // double coset counts are invariant
            for (unsigned m2 = 0; m2 < 16; m2 += 5) {
                auto Y = subset(m2, 4);
                std::vector<int> tY;
                for (int y : Y) tY.push_back(g.pi0_apply(t, y));
                std::sort(tY.begin(), tY.end());
                CHECK(double_cosets(g, X, Y).size() ==
                      double_cosets(g, tX, tY).size());
            }
        }
    }
}

TEST_CASE("extended double cosets cover the pi0 components")
{
    ExtendedWeylGroup g(Family::A, 2, ExtendedWeylGroup::Pi0::Flip);
    // over the extended group W = W' x| Z/2, the Borel case sees both
    // components: 12 cosets of size 1
    auto reps = double_cosets(g, {}, {});
    CHECK(reps.size() == 12);
    auto sizes = double_coset_sizes(g, {}, {});
    CHECK(std::accumulate(sizes.begin(), sizes.end(), 0LL) == 12);

    // with Omega = pi0 on both sides, representative count matches a direct
    // orbit scan of the 12 elements under left/right flip multiplication
    ParabolicPair borel_ext{{}, {0, 1}};
    auto terms = mackey_terms(g, borel_ext, borel_ext);
    auto all = g.all_elements();
    auto flip = g.pi0_element(1);
    std::set<std::pair<std::vector<int16_t>, int>> seen;
    int expect = 0;
    for (const auto& e : all) {
        if (seen.count({e.perm, e.theta})) continue;
        expect++;
        std::vector<ExtElement> stack{e};
        seen.insert({e.perm, e.theta});
        while (!stack.empty()) {
            auto cur = stack.back();
            stack.pop_back();
            for (auto next : {g.multiply(flip, cur), g.multiply(cur, flip)})
                if (seen.insert({next.perm, next.theta}).second)
                    stack.push_back(next);
        }
    }
    CHECK(static_cast<int>(terms.size()) == expect);
}
