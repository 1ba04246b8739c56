#include "springer/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace springer {

namespace {

std::vector<int16_t> identity_perm(int n)
{
    std::vector<int16_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

std::vector<int16_t> compose(const std::vector<int16_t>& a, const std::vector<int16_t>& b)
{
    // (a o b)(r) = a(b(r))
    std::vector<int16_t> c(a.size());
    for (size_t i = 0; i < a.size(); i++)
        c[i] = a[b[i]];
    return c;
}

} // namespace

ExtendedWeylGroup::ExtendedWeylGroup(Family f, int rank, Pi0 spec)
    : rs_(make_root_system(f, rank))
{
    std::vector<std::vector<int>> gens;
    auto autos = diagram_automorphisms(rs_);
    auto is_identity = [&](const std::vector<int>& a) {
        for (int i = 0; i < rs_.rank; i++)
            if (a[i] != i) return false;
        return true;
    };
    switch (spec) {
    case Pi0::Trivial:
        break;
    case Pi0::Flip:
        for (const auto& a : autos) {
            bool inv = true;
            for (int i = 0; i < rs_.rank; i++)
                if (a[a[i]] != i) inv = false;
            if (!is_identity(a) && inv) {
                gens.push_back(a);
                break;
            }
        }
        if (gens.empty())
            throw std::invalid_argument("no flip automorphism for this diagram");
        break;
    case Pi0::Triality:
        for (const auto& a : autos) {
            std::vector<int> sq(rs_.rank);
            for (int i = 0; i < rs_.rank; i++) sq[i] = a[a[i]];
            if (!is_identity(a) && !is_identity(sq)) {
                gens.push_back(a);
                break;
            }
        }
        if (gens.empty())
            throw std::invalid_argument("no triality automorphism for this diagram");
        break;
    case Pi0::Full:
        gens = autos;
        break;
    }
    init_pi0(std::move(gens));
}

ExtendedWeylGroup::ExtendedWeylGroup(Family f, int rank,
                                     std::vector<std::vector<int>> pi0_generators)
    : rs_(make_root_system(f, rank))
{
    for (const auto& p : pi0_generators) {
        if (static_cast<int>(p.size()) != rs_.rank)
            throw std::invalid_argument("pi0 generator has wrong size");
        for (int i = 0; i < rs_.rank; i++)
            for (int j = 0; j < rs_.rank; j++)
                if (rs_.cartan[i][j] != rs_.cartan[p[i]][p[j]])
                    throw std::invalid_argument(
                        "pi0 generator does not preserve the Cartan matrix");
    }
    init_pi0(std::move(pi0_generators));
}

void ExtendedWeylGroup::init_pi0(std::vector<std::vector<int>> gens)
{
    std::vector<int> id(rs_.rank);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> queue{id};
    while (!queue.empty()) {
        auto a = queue.back();
        queue.pop_back();
        for (const auto& g : gens) {
            std::vector<int> c(rs_.rank);
            for (int i = 0; i < rs_.rank; i++) c[i] = g[a[i]];
            if (seen.insert(c).second)
                queue.push_back(c);
        }
    }
    pi0_.assign(seen.begin(), seen.end());
    std::sort(pi0_.begin(), pi0_.end());
    auto it = std::find(pi0_.begin(), pi0_.end(), id);
    std::rotate(pi0_.begin(), it, it + 1);

    int m = static_cast<int>(pi0_.size());
    pi0_mult_.assign(m, std::vector<int>(m, -1));
    pi0_inv_.assign(m, -1);
    auto find = [&](const std::vector<int>& p) {
        return static_cast<int>(std::find(pi0_.begin(), pi0_.end(), p) - pi0_.begin());
    };
    for (int a = 0; a < m; a++)
        for (int b = 0; b < m; b++) {
            std::vector<int> c(rs_.rank);
            for (int i = 0; i < rs_.rank; i++) c[i] = pi0_[a][pi0_[b][i]];
            pi0_mult_[a][b] = find(c);
        }
    for (int a = 0; a < m; a++)
        for (int b = 0; b < m; b++)
            if (pi0_mult_[a][b] == 0)
                pi0_inv_[a] = b;

    // theta acts on a root by permuting its simple coordinates
    pi0_root_perm_.clear();
    for (const auto& t : pi0_) {
        std::vector<int16_t> perm(rs_.num_roots());
        for (int r = 0; r < rs_.num_roots(); r++) {
            std::vector<int> c(rs_.rank, 0);
            for (int i = 0; i < rs_.rank; i++)
                c[t[i]] += rs_.roots[r][i];
            perm[r] = static_cast<int16_t>(rs_.root_index(c));
        }
        pi0_root_perm_.push_back(std::move(perm));
    }

    simple_refl_.clear();
    for (int i = 0; i < rs_.rank; i++) {
        std::vector<int16_t> perm(rs_.num_roots());
        for (int r = 0; r < rs_.num_roots(); r++)
            perm[r] = static_cast<int16_t>(rs_.reflect(r, i));
        simple_refl_.push_back(std::move(perm));
    }
}

ExtElement ExtendedWeylGroup::identity() const
{
    return {identity_perm(rs_.num_roots()), 0};
}

ExtElement ExtendedWeylGroup::simple_reflection(int i) const
{
    if (i < 0 || i >= rs_.rank)
        throw std::invalid_argument("simple_reflection: index out of range");
    return {simple_refl_[i], 0};
}

ExtElement ExtendedWeylGroup::pi0_element(int t) const
{
    return {pi0_root_perm_[t], t};
}

ExtElement ExtendedWeylGroup::multiply(const ExtElement& a, const ExtElement& b) const
{
    return {compose(a.perm, b.perm), pi0_mult_[a.theta][b.theta]};
}

ExtElement ExtendedWeylGroup::inverse(const ExtElement& a) const
{
    ExtElement r;
    r.perm.resize(a.perm.size());
    for (size_t i = 0; i < a.perm.size(); i++)
        r.perm[a.perm[i]] = static_cast<int16_t>(i);
    r.theta = pi0_inv_[a.theta];
    return r;
}

int ExtendedWeylGroup::length(const ExtElement& a) const
{
    int l = 0;
    for (int r = 0; r < rs_.n_pos; r++)
        if (!rs_.is_positive(a.perm[r]))
            l++;
    return l;
}

RootSet ExtendedWeylGroup::apply(const ExtElement& a, const RootSet& s) const
{
    RootSet out;
    for (int r = 0; r < rs_.num_roots(); r++)
        if (s[r])
            out.set(a.perm[r]);
    return out;
}

long long ExtendedWeylGroup::weyl_order() const
{
    long long n = rs_.rank;
    auto fact = [](long long k) {
        long long f = 1;
        for (long long i = 2; i <= k; i++) f *= i;
        return f;
    };
    switch (rs_.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return fact(n) << n;
    case Family::D: return fact(n) << (n - 1);
    case Family::G2: return 12;
    case Family::F4: return 1152;
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
    }
    return 0;
}

const std::vector<ExtElement>& ExtendedWeylGroup::weyl_elements() const
{
    return atlas().weyl;
}

const ExtendedWeylGroup::Atlas& ExtendedWeylGroup::atlas() const
{
    std::lock_guard<std::mutex> lock(atlas_mutex_);
    if (atlas_)
        return *atlas_;
    if (weyl_order() > cap_)
        throw std::domain_error("Weyl group too large to enumerate (order " +
                                std::to_string(weyl_order()) + ", cap " +
                                std::to_string(cap_) + ")");
    auto at = std::make_unique<Atlas>();

    std::set<std::vector<int16_t>> seen;
    std::vector<std::vector<int16_t>> queue;
    auto id = identity_perm(rs_.num_roots());
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        auto w = queue.back();
        queue.pop_back();
        for (int i = 0; i < rs_.rank; i++) {
            auto c = compose(w, simple_refl_[i]);
            if (seen.insert(c).second)
                queue.push_back(c);
        }
    }
    for (auto& p : seen)
        at->weyl.push_back({p, 0});

    for (int t = 0; t < pi0_size(); t++)
        for (const auto& w : at->weyl)
            at->elems.push_back({compose(w.perm, pi0_root_perm_[t]), t});

    for (size_t i = 0; i < at->elems.size(); i++)
        at->index[{at->elems[i].perm, at->elems[i].theta}] = static_cast<int>(i);
    at->length.resize(at->elems.size());
    for (size_t i = 0; i < at->elems.size(); i++)
        at->length[i] = length(at->elems[i]);

    int ngens = rs_.rank + pi0_size();
    at->lmul.assign(ngens, std::vector<int>(at->elems.size()));
    at->rmul.assign(ngens, std::vector<int>(at->elems.size()));
    for (int gidx = 0; gidx < ngens; gidx++) {
        ExtElement gen = gidx < rs_.rank ? simple_reflection(gidx)
                                         : pi0_element(gidx - rs_.rank);
        for (size_t i = 0; i < at->elems.size(); i++) {
            auto l = multiply(gen, at->elems[i]);
            auto r = multiply(at->elems[i], gen);
            at->lmul[gidx][i] = at->index.at({l.perm, l.theta});
            at->rmul[gidx][i] = at->index.at({r.perm, r.theta});
        }
    }
    atlas_ = std::move(at);
    return *atlas_;
}

std::vector<ExtElement> ExtendedWeylGroup::all_elements() const
{
    return atlas().elems;
}

std::vector<ExtElement> ExtendedWeylGroup::subgroup(const std::vector<int>& X,
                                                    const std::vector<int>& omega) const
{
    std::vector<ExtElement> gens;
    for (int x : X)
        gens.push_back(simple_reflection(x));
    for (int t : omega)
        if (t != 0)
            gens.push_back(pi0_element(t));
    std::set<std::pair<std::vector<int16_t>, int>> seen;
    std::vector<ExtElement> queue{identity()};
    seen.insert({queue[0].perm, 0});
    std::vector<ExtElement> out{queue[0]};
    while (!queue.empty()) {
        auto w = queue.back();
        queue.pop_back();
        for (const auto& g : gens) {
            auto c = multiply(w, g);
            if (seen.insert({c.perm, c.theta}).second) {
                out.push_back(c);
                queue.push_back(c);
            }
        }
    }
    return out;
}

RootSet ExtendedWeylGroup::levi_roots(const std::vector<int>& X) const
{
    RootSet s;
    std::vector<bool> in(rs_.rank, false);
    for (int x : X) in[x] = true;
    for (int r = 0; r < rs_.num_roots(); r++) {
        bool ok = true;
        for (int i = 0; i < rs_.rank && ok; i++)
            if (rs_.roots[r][i] != 0 && !in[i])
                ok = false;
        if (ok)
            s.set(r);
    }
    return s;
}

RootSet ExtendedWeylGroup::parabolic_roots(const std::vector<int>& X) const
{
    RootSet s = levi_roots(X);
    for (int r = 0; r < rs_.n_pos; r++)
        s.set(r);
    return s;
}

namespace {

std::vector<std::vector<int>> subgroups_of_pi0(const ExtendedWeylGroup& g,
                                               const std::vector<int>& ambient)
{
    std::vector<std::vector<int>> out;
    int m = static_cast<int>(ambient.size());
    for (int mask = 0; mask < (1 << m); mask++) {
        std::vector<int> elems;
        for (int i = 0; i < m; i++)
            if (mask & (1 << i))
                elems.push_back(ambient[i]);
        if (elems.empty() || elems[0] != 0)
            continue; // must contain the identity (pi0 index 0)
        bool closed = true;
        for (int a : elems) {
            for (int b : elems) {
                int c = g.pi0_mul(a, b);
                if (!std::binary_search(elems.begin(), elems.end(), c)) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed)
            out.push_back(elems);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<ParabolicPair> enumerate_parabolic_pairs(const ExtendedWeylGroup& g)
{
    std::vector<ParabolicPair> out;
    int n = g.rank();
    for (int mask = 0; mask < (1 << n); mask++) {
        std::vector<int> X;
        for (int i = 0; i < n; i++)
            if (mask & (1 << i))
                X.push_back(i);
        std::vector<int> stab;
        for (int t = 0; t < g.pi0_size(); t++) {
            std::vector<int> img;
            for (int x : X) img.push_back(g.pi0_apply(t, x));
            std::sort(img.begin(), img.end());
            if (img == X)
                stab.push_back(t);
        }
        for (auto& omega : subgroups_of_pi0(g, stab))
            out.push_back({X, omega});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> parabolic_pair_classes(const ExtendedWeylGroup& g)
{
    auto pairs = enumerate_parabolic_pairs(g);
    std::map<ParabolicPair, int> idx;
    for (size_t i = 0; i < pairs.size(); i++)
        idx[pairs[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> classes;
    std::vector<bool> done(pairs.size(), false);
    for (size_t i = 0; i < pairs.size(); i++) {
        if (done[i]) continue;
        std::set<int> cls;
        for (int t = 0; t < g.pi0_size(); t++) {
            std::vector<int> X;
            for (int x : pairs[i].X) X.push_back(g.pi0_apply(t, x));
            std::sort(X.begin(), X.end());
            std::vector<int> om;
            for (int o : pairs[i].omega)
                om.push_back(g.pi0_mul(g.pi0_mul(t, o), g.pi0_inv(t)));
            std::sort(om.begin(), om.end());
            auto it = idx.find({X, om});
            if (it == idx.end())
                throw std::logic_error("parabolic_pair_classes: conjugate pair missing");
            cls.insert(it->second);
        }
        std::vector<int> v(cls.begin(), cls.end());
        for (int j : v) done[j] = true;
        classes.push_back(std::move(v));
    }
    return classes;
}

LeviLabel quasi_levi(const ExtendedWeylGroup& g, const std::vector<int>& X)
{
    std::vector<bool> in(g.rank(), false);
    for (int x : X) {
        if (x < 0 || x >= g.rank())
            throw std::invalid_argument("quasi_levi: node out of range");
        in[x] = true;
    }
    // theta fixes the annihilator lattice of X pointwise iff it fixes every
    // fundamental coweight off X, i.e. every node outside X
    std::vector<int> omega;
    for (int t = 0; t < g.pi0_size(); t++) {
        bool fixes = true;
        for (int j = 0; j < g.rank() && fixes; j++)
            if (!in[j] && g.pi0_apply(t, j) != j)
                fixes = false;
        if (fixes)
            omega.push_back(t);
    }
    std::vector<int> Xs(X);
    std::sort(Xs.begin(), Xs.end());
    return {Xs, omega, subset_type(g.roots(), Xs)};
}

namespace {

struct CosetScan {
    std::vector<ExtElement> reps;
    std::vector<long long> sizes;
};

bool elt_less(const ExtElement& a, int la, const ExtElement& b, int lb)
{
    if (la != lb) return la < lb;
    if (a.theta != b.theta) return a.theta < b.theta;
    return a.perm < b.perm;
}

CosetScan scan_double_cosets(const ExtendedWeylGroup& g,
                             const std::vector<int>& left_gens,
                             const std::vector<int>& right_gens,
                             const std::vector<int>& X_M,
                             const std::vector<int>& X_L)
{
    int ngens = g.rank() + g.pi0_size();
    for (int gi : left_gens)
        if (gi < 0 || gi >= ngens)
            throw std::invalid_argument("double cosets: generator index out of range");
    for (int gi : right_gens)
        if (gi < 0 || gi >= ngens)
            throw std::invalid_argument("double cosets: generator index out of range");
    const auto& at = g.atlas();
    int n = static_cast<int>(at.elems.size());
    std::vector<char> visited(n, 0);
    CosetScan out;

    for (int start = 0; start < n; start++) {
        if (visited[start]) continue;
        std::vector<int> stack{start};
        visited[start] = 1;
        long long size = 0;
        int best = start;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            size++;
            if (elt_less(at.elems[cur], at.length[cur], at.elems[best], at.length[best]))
                best = cur;
            for (int gi : left_gens) {
                int j = at.lmul[gi][cur];
                if (!visited[j]) {
                    visited[j] = 1;
                    stack.push_back(j);
                }
            }
            for (int gi : right_gens) {
                int j = at.rmul[gi][cur];
                if (!visited[j]) {
                    visited[j] = 1;
                    stack.push_back(j);
                }
            }
        }
        out.reps.push_back(at.elems[best]);
        out.sizes.push_back(size);
    }

    std::vector<size_t> perm(out.reps.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<long long> dims(out.reps.size());
    for (size_t i = 0; i < out.reps.size(); i++)
        dims[i] = dim_QwP(g, X_M, out.reps[i], X_L);
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        if (dims[a] != dims[b]) return dims[a] < dims[b];
        return elt_less(out.reps[a], g.length(out.reps[a]), out.reps[b],
                        g.length(out.reps[b]));
    });
    CosetScan sorted;
    for (size_t i : perm) {
        sorted.reps.push_back(out.reps[i]);
        sorted.sizes.push_back(out.sizes[i]);
    }
    return sorted;
}

std::vector<int> reflection_gen_ids(const std::vector<int>& X)
{
    return X;
}

} // namespace

std::vector<ExtElement> double_cosets(const ExtendedWeylGroup& g,
                                      const std::vector<int>& X_M,
                                      const std::vector<int>& X_L)
{
    return scan_double_cosets(g, reflection_gen_ids(X_M), reflection_gen_ids(X_L),
                              X_M, X_L)
        .reps;
}

std::vector<long long> double_coset_sizes(const ExtendedWeylGroup& g,
                                          const std::vector<int>& X_M,
                                          const std::vector<int>& X_L)
{
    return scan_double_cosets(g, reflection_gen_ids(X_M), reflection_gen_ids(X_L),
                              X_M, X_L)
        .sizes;
}

long long dim_QwP(const ExtendedWeylGroup& g, const std::vector<int>& X_M,
                  const ExtElement& w, const std::vector<int>& X_L)
{
    if (static_cast<int>(w.perm.size()) != g.roots().num_roots())
        throw std::invalid_argument("dim_QwP: element does not belong to this group");
    RootSet phi_q = g.parabolic_roots(X_M);
    RootSet phi_p = g.parabolic_roots(X_L);
    RootSet w_phi_p = g.apply(w, phi_p);
    return g.rank() + static_cast<long long>(phi_q.count()) +
           static_cast<long long>(phi_p.count()) -
           static_cast<long long>((phi_q & w_phi_p).count());
}

std::vector<MackeyTerm> mackey_terms(const ExtendedWeylGroup& g,
                                     const ParabolicPair& Q,
                                     const ParabolicPair& P)
{
    std::vector<int> left = Q.X;
    for (int t : Q.omega)
        if (t != 0)
            left.push_back(g.rank() + t);
    std::vector<int> right = P.X;
    for (int t : P.omega)
        if (t != 0)
            right.push_back(g.rank() + t);

    auto scan = scan_double_cosets(g, left, right, Q.X, P.X);

    RootSet phi_m = g.levi_roots(Q.X);
    RootSet phi_q = g.parabolic_roots(Q.X);
    RootSet phi_l = g.levi_roots(P.X);
    RootSet phi_p = g.parabolic_roots(P.X);

    auto to_indices = [&](const RootSet& s) {
        std::vector<int> v;
        for (int r = 0; r < g.roots().num_roots(); r++)
            if (s[r])
                v.push_back(r);
        return v;
    };

    std::vector<MackeyTerm> out;
    for (const auto& w : scan.reps) {
        MackeyTerm t;
        t.w = w;
        RootSet w_l = g.apply(w, phi_l);
        RootSet w_p = g.apply(w, phi_p);
        t.levi_roots = to_indices(phi_m & w_l);
        t.parabolic_in_M = to_indices(phi_m & w_p);
        t.parabolic_in_wL = to_indices(phi_q & w_l);
        for (int a : Q.omega) {
            int conj = g.pi0_mul(g.pi0_mul(g.pi0_inv(w.theta), a), w.theta);
            if (std::find(P.omega.begin(), P.omega.end(), conj) != P.omega.end())
                t.omega.push_back(a);
        }
        out.push_back(std::move(t));
    }
    return out;
}

bool subsets_weyl_conjugate(const ExtendedWeylGroup& g, const std::vector<int>& X,
                            const std::vector<int>& Xp)
{
    RootSet a = g.levi_roots(X);
    RootSet b = g.levi_roots(Xp);
    if (a.count() != b.count())
        return false;
    for (const auto& w : g.weyl_elements())
        if (g.apply(w, a) == b)
            return true;
    return false;
}

std::vector<std::vector<std::vector<int>>> levi_subset_classes(const ExtendedWeylGroup& g)
{
    int n = g.rank();
    std::vector<std::vector<int>> subsets;
    for (int mask = 0; mask < (1 << n); mask++) {
        std::vector<int> X;
        for (int i = 0; i < n; i++)
            if (mask & (1 << i))
                X.push_back(i);
        subsets.push_back(X);
    }
    std::vector<std::vector<std::vector<int>>> classes;
    std::vector<bool> done(subsets.size(), false);
    for (size_t i = 0; i < subsets.size(); i++) {
        if (done[i]) continue;
        std::vector<std::vector<int>> cls;
        for (size_t j = i; j < subsets.size(); j++) {
            if (done[j]) continue;
            if (j == i || subsets_weyl_conjugate(g, subsets[i], subsets[j])) {
                cls.push_back(subsets[j]);
                done[j] = true;
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

} // namespace springer
