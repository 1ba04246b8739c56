#include "springer/character_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace springer {

namespace {

long long power_mod(long long b, long long e, long long p)
{
    long long r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long long inverse_mod(long long a, long long p)
{
    return power_mod(((a % p) + p) % p, p - 2, p);
}

bool is_prime(long long n)
{
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

// smallest prime p = 1 mod e with p > lo
long long find_prime(long long e, long long lo)
{
    long long p = (lo / e + 1) * e + 1;
    while (!is_prime(p))
        p += e;
    return p;
}

long long primitive_root_of_unity(long long e, long long p)
{
    std::vector<long long> prime_factors;
    long long m = p - 1;
    for (long long d = 2; d * d <= m; d++)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long long g = 2; g < p; g++) {
        bool primitive = true;
        for (long long q : prime_factors)
            if (power_mod(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        if (primitive)
            return power_mod(g, (p - 1) / e, p);
    }
    throw std::logic_error("no primitive root found");
}

using Mat = std::vector<std::vector<long long>>;

// characteristic polynomial over F_p via Hessenberg reduction
std::vector<long long> charpoly_mod(Mat a, long long p)
{
    int n = static_cast<int>(a.size());
    for (int k = 1; k + 1 < n; k++) {
        int pivot = -1;
        for (int i = k; i < n; i++)
            if (a[i][k - 1] % p != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            for (int i = 0; i < n; i++)
                std::swap(a[i][pivot], a[i][k]);
        }
        long long inv = inverse_mod(a[k][k - 1], p);
        for (int i = k + 1; i < n; i++) {
            long long f = a[i][k - 1] % p * inv % p;
            if (!f) continue;
            for (int j = 0; j < n; j++)
                a[i][j] = ((a[i][j] - f * a[k][j]) % p + p) % p;
            for (int j = 0; j < n; j++)
                a[j][k] = (a[j][k] + f * a[j][i]) % p;
        }
    }
    std::vector<std::vector<long long>> polys(n + 1);
    polys[0] = {1};
    for (int k = 1; k <= n; k++) {
        std::vector<long long> pk(k + 1, 0);
        const auto& prev = polys[k - 1];
        for (int i = 0; i < k; i++) {
            pk[i + 1] = (pk[i + 1] + prev[i]) % p;
            pk[i] = ((pk[i] - a[k - 1][k - 1] % p * prev[i]) % p + p) % p;
        }
        long long beta = 1;
        for (int i = k - 1; i >= 1; i--) {
            beta = beta * a[i][i - 1] % p;
            long long coef = beta * a[i - 1][k - 1] % p;
            const auto& pi = polys[i - 1];
            for (size_t j = 0; j < pi.size(); j++)
                pk[j] = ((pk[j] - coef * pi[j]) % p + p) % p;
        }
        polys[k] = std::move(pk);
    }
    return polys[n];
}

std::vector<long long> poly_roots_mod(const std::vector<long long>& poly, long long p)
{
    std::vector<long long> roots;
    for (long long x = 0; x < p; x++) {
        long long v = 0;
        for (int i = static_cast<int>(poly.size()) - 1; i >= 0; i--)
            v = (v * x + poly[i]) % p;
        if (v == 0)
            roots.push_back(x);
    }
    return roots;
}

std::vector<std::vector<long long>> nullspace_mod(Mat a, long long p)
{
    int n = static_cast<int>(a.size());
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; col++) {
        int pr = -1;
        for (int r = rank; r < n; r++)
            if (a[r][col] % p != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[pr], a[rank]);
        long long inv = inverse_mod(a[rank][col], p);
        for (int j = 0; j < n; j++)
            a[rank][j] = a[rank][j] % p * inv % p;
        for (int r = 0; r < n; r++) {
            if (r == rank) continue;
            long long f = a[r][col] % p;
            if (!f) continue;
            for (int j = 0; j < n; j++)
                a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
        }
        pivot_col[rank] = col;
        rank++;
    }
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; r++)
        is_pivot[pivot_col[r]] = true;
    std::vector<std::vector<long long>> basis;
    for (int free = 0; free < n; free++) {
        if (is_pivot[free]) continue;
        std::vector<long long> v(n, 0);
        v[free] = 1;
        for (int r = 0; r < rank; r++)
            v[pivot_col[r]] = (p - a[r][free] % p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

struct ClassData {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
    std::vector<int> inverse_class;
    std::vector<int> reps;
};

ClassData make_class_data(const FiniteGroup& g)
{
    ClassData cd;
    cd.classes = conjugacy_classes(g);
    cd.class_of.assign(g.size(), -1);
    for (size_t i = 0; i < cd.classes.size(); i++)
        for (int e : cd.classes[i])
            cd.class_of[e] = static_cast<int>(i);
    cd.inverse_class.resize(cd.classes.size());
    for (size_t i = 0; i < cd.classes.size(); i++)
        cd.inverse_class[i] = cd.class_of[g.inv(cd.classes[i][0])];
    for (auto& c : cd.classes)
        cd.reps.push_back(c[0]);
    return cd;
}

/* Characters of an abelian group by extension along a cyclic filtration:
 * each new generator g of relative order m extends every character theta in
 * exactly m ways, theta(g) = zeta_e^x with m x = a (mod e) where
 * zeta_e^a = theta(g^m).
 */
CharacterTable abelian_table(const FiniteGroup& g)
{
    int n = g.size();
    int e = g.exponent();

    std::vector<int> span{0};                  // current subgroup, by element
    std::vector<int> pos(n, -1);               // element -> position in span
    pos[0] = 0;
    std::vector<std::vector<long long>> thetas{{0}}; // exponent per span position

    while (static_cast<int>(span.size()) < n) {
        int gen = -1;
        for (int x = 0; x < n && gen < 0; x++)
            if (pos[x] < 0)
                gen = x;
        // relative order of gen modulo the current span
        int m = 1, c = gen;
        while (pos[c] < 0) {
            c = g.mul(c, gen);
            m++;
        }
        long long a_exp = 0; // theta exponent of gen^m, per character (filled below)
        int gm = c;          // gen^m, lies in span

        int old_size = static_cast<int>(span.size());
        // extend span: elements h * gen^k, k = 1..m-1
        int pw = gen;
        for (int k = 1; k < m; k++) {
            for (int i = 0; i < old_size; i++) {
                int elem = g.mul(span[i], pw);
                pos[elem] = static_cast<int>(span.size());
                span.push_back(elem);
            }
            pw = g.mul(pw, gen);
        }

        std::vector<std::vector<long long>> next;
        for (const auto& theta : thetas) {
            a_exp = theta[pos[gm]];
            if (a_exp % m != 0)
                throw std::logic_error("abelian_table: extension obstruction");
            for (int j = 0; j < m; j++) {
                long long x = a_exp / m + static_cast<long long>(j) * (e / m);
                std::vector<long long> ext(span.size());
                for (int i = 0; i < old_size; i++)
                    ext[i] = theta[i];
                for (int k = 1; k < m; k++)
                    for (int i = 0; i < old_size; i++)
                        ext[old_size + (k - 1) * old_size + i] = (theta[i] + k * x) % e;
                next.push_back(std::move(ext));
            }
        }
        thetas = std::move(next);
    }

    auto cd = make_class_data(g);
    CharacterTable t;
    t.classes = cd.classes;
    for (const auto& theta : thetas) {
        std::vector<Cyclotomic> row;
        for (int cidx = 0; cidx < static_cast<int>(cd.classes.size()); cidx++)
            row.push_back(Cyclotomic::root_of_unity(e, theta[pos[cd.reps[cidx]]]));
        t.values.push_back(std::move(row));
        t.degrees.push_back(1);
    }
    return t;
}

} // namespace

CharacterTable character_table(const FiniteGroup& g, int max_order)
{
    if (g.size() > max_order)
        throw std::domain_error("character_table: group order exceeds bound");

    CharacterTable t;
    if (g.abelian()) {
        t = abelian_table(g);
    } else {
        auto cd = make_class_data(g);
        int r = static_cast<int>(cd.classes.size());
        int n = g.size();
        int e = g.exponent();

        long long root = 1;
        while (root * root < 4LL * n)
            root++;
        long long p = find_prime(e, std::max<long long>(2 * root + 1, 2 * e));
        long long w = primitive_root_of_unity(e, p);

        // class multiplication action: act[i][j][k] v_k, eigenvalue omega_i
        std::vector<Mat> act(r, Mat(r, std::vector<long long>(r, 0)));
        for (int i = 0; i < r; i++)
            for (int j = 0; j < r; j++) {
                std::vector<long long> cnt(r, 0);
                for (int x : cd.classes[i])
                    for (int y : cd.classes[j])
                        cnt[cd.class_of[g.mul(x, y)]]++;
                for (int k = 0; k < r; k++) {
                    if (cnt[k] % cd.classes[k].size() != 0)
                        throw std::logic_error("class algebra count not divisible");
                    act[i][j][k] = cnt[k] / static_cast<long long>(cd.classes[k].size()) % p;
                }
            }

        // split F_p^r into common eigenspaces of the class matrices
        std::vector<std::vector<std::vector<long long>>> spaces;
        {
            std::vector<std::vector<long long>> full;
            for (int i = 0; i < r; i++) {
                std::vector<long long> v(r, 0);
                v[i] = 1;
                full.push_back(v);
            }
            spaces.push_back(full);
        }
        for (int i = 1; i < r; i++) {
            std::vector<std::vector<std::vector<long long>>> next;
            for (auto& basis : spaces) {
                int k = static_cast<int>(basis.size());
                if (k == 1) {
                    next.push_back(basis);
                    continue;
                }
                // matrix of act[i] restricted to the subspace, in basis coords
                Mat sys(r, std::vector<long long>(2 * k, 0));
                for (int c = 0; c < k; c++)
                    for (int row = 0; row < r; row++)
                        sys[row][c] = basis[c][row] % p;
                for (int c = 0; c < k; c++)
                    for (int row = 0; row < r; row++) {
                        long long acc = 0;
                        for (int m2 = 0; m2 < r; m2++)
                            acc = (acc + act[i][row][m2] * basis[c][m2]) % p;
                        sys[row][k + c] = acc;
                    }
                int rank2 = 0;
                for (int col = 0; col < k && rank2 < r; col++) {
                    int pr = -1;
                    for (int row = rank2; row < r; row++)
                        if (sys[row][col] % p != 0) {
                            pr = row;
                            break;
                        }
                    if (pr < 0)
                        throw std::logic_error("character_table: basis not independent");
                    std::swap(sys[pr], sys[rank2]);
                    long long inv = inverse_mod(sys[rank2][col], p);
                    for (int j2 = 0; j2 < 2 * k; j2++)
                        sys[rank2][j2] = sys[rank2][j2] % p * inv % p;
                    for (int row = 0; row < r; row++) {
                        if (row == rank2) continue;
                        long long f = sys[row][col] % p;
                        if (!f) continue;
                        for (int j2 = 0; j2 < 2 * k; j2++)
                            sys[row][j2] = ((sys[row][j2] - f * sys[rank2][j2]) % p + p) % p;
                    }
                    rank2++;
                }
                Mat a(k, std::vector<long long>(k, 0));
                for (int c = 0; c < k; c++)
                    for (int row = 0; row < k; row++)
                        a[row][c] = sys[row][k + c];

                auto roots = poly_roots_mod(charpoly_mod(a, p), p);
                std::sort(roots.begin(), roots.end());
                roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
                if (roots.size() <= 1) {
                    next.push_back(basis);
                    continue;
                }
                for (long long lam : roots) {
                    Mat shifted = a;
                    for (int d = 0; d < k; d++)
                        shifted[d][d] = ((shifted[d][d] - lam) % p + p) % p;
                    auto null = nullspace_mod(shifted, p);
                    if (null.empty())
                        continue;
                    std::vector<std::vector<long long>> sub;
                    for (auto& coords : null) {
                        std::vector<long long> v(r, 0);
                        for (int c = 0; c < k; c++)
                            for (int row = 0; row < r; row++)
                                v[row] = (v[row] + coords[c] * basis[c][row]) % p;
                        sub.push_back(std::move(v));
                    }
                    next.push_back(std::move(sub));
                }
            }
            spaces = std::move(next);
            bool all_one = true;
            for (auto& s : spaces)
                if (s.size() > 1) all_one = false;
            if (all_one)
                break;
        }
        if (static_cast<int>(spaces.size()) != r)
            throw std::logic_error("character_table: eigenspace split failed");

        t.classes = cd.classes;
        std::vector<int> rep_order(r);
        for (int i = 0; i < r; i++)
            rep_order[i] = g.order_of(cd.reps[i]);
        std::vector<std::vector<int>> power_class(r);
        for (int i = 0; i < r; i++) {
            int o = rep_order[i];
            power_class[i].resize(o);
            int c = 0;
            for (int k = 0; k < o; k++) {
                power_class[i][k] = cd.class_of[c];
                c = g.mul(c, cd.reps[i]);
            }
        }

        int id_class = cd.class_of[0];
        for (auto& space : spaces) {
            auto& v = space[0];
            if (v[id_class] % p == 0)
                throw std::logic_error("character_table: eigenvector vanishes at identity");
            long long norm = inverse_mod(v[id_class], p);
            std::vector<long long> omega(r);
            for (int i = 0; i < r; i++) {
                long long acc = 0;
                for (int m2 = 0; m2 < r; m2++)
                    acc = (acc + act[i][id_class][m2] * v[m2]) % p;
                omega[i] = acc * norm % p;
            }
            long long s = 0;
            for (int i = 0; i < r; i++) {
                long long term = omega[i] * omega[cd.inverse_class[i]] % p;
                term = term * inverse_mod(static_cast<long long>(cd.classes[i].size()), p) % p;
                s = (s + term) % p;
            }
            long long d2 = n % p * inverse_mod(s, p) % p;
            long long d = -1;
            for (long long c = 1; c * c <= n; c++)
                if (c * c % p == d2) {
                    d = c;
                    break;
                }
            if (d < 0)
                throw std::logic_error("character_table: degree lift failed");

            std::vector<long long> chi_mod(r);
            for (int i = 0; i < r; i++)
                chi_mod[i] = omega[i] * (d % p) % p *
                             inverse_mod(static_cast<long long>(cd.classes[i].size()), p) % p;

            // exact lift: chi(g_i) = sum_j a_j zeta_m^j with
            // a_j = (1/m) sum_k chi(g_i^k) eta^{-jk} mod p, 0 <= a_j <= d
            std::vector<Cyclotomic> row(r);
            for (int i = 0; i < r; i++) {
                int m2 = rep_order[i];
                long long eta = power_mod(w, e / m2, p);
                long long m_inv = inverse_mod(m2, p);
                Cyclotomic val(0);
                for (int j = 0; j < m2; j++) {
                    long long aj = 0;
                    for (int k = 0; k < m2; k++) {
                        long long em = power_mod(eta, static_cast<long long>(
                                                          (m2 - j) % m2) * k % m2, p);
                        aj = (aj + chi_mod[power_class[i][k]] * em) % p;
                    }
                    aj = aj * m_inv % p;
                    if (aj > n)
                        throw std::logic_error("character_table: lift out of range");
                    if (aj != 0)
                        val = val + Cyclotomic::root_of_unity(
                                        e, static_cast<long long>(j) * (e / m2)) *
                                        Cyclotomic(aj);
                }
                row[i] = val;
            }
            t.degrees.push_back(static_cast<int>(d));
            t.values.push_back(std::move(row));
        }
    }

    std::vector<size_t> perm(t.values.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
        for (size_t c = 0; c < t.values[a].size(); c++) {
            if (t.values[a][c] == t.values[b][c]) continue;
            return t.values[a][c] < t.values[b][c];
        }
        return false;
    });
    CharacterTable sorted;
    sorted.classes = t.classes;
    for (size_t i : perm) {
        sorted.degrees.push_back(t.degrees[i]);
        sorted.values.push_back(std::move(t.values[i]));
    }
    return sorted;
}

bool first_orthogonality_holds(const FiniteGroup& g, const CharacterTable& t)
{
    int r = t.num_classes();
    for (int a = 0; a < r; a++)
        for (int b = a; b < r; b++) {
            Cyclotomic s(0);
            for (int c = 0; c < r; c++) {
                Cyclotomic term = t.values[a][c] * t.values[b][c].conj();
                s = s + term * Cyclotomic(static_cast<long long>(t.classes[c].size()));
            }
            if (s != Cyclotomic(a == b ? g.size() : 0))
                return false;
        }
    return true;
}

bool second_orthogonality_holds(const FiniteGroup& g, const CharacterTable& t)
{
    int r = t.num_classes();
    for (int c1 = 0; c1 < r; c1++)
        for (int c2 = c1; c2 < r; c2++) {
            Cyclotomic s(0);
            for (int a = 0; a < r; a++)
                s = s + t.values[a][c1] * t.values[a][c2].conj();
            long long expect =
                c1 == c2 ? g.size() / static_cast<long long>(t.classes[c1].size()) : 0;
            if (s != Cyclotomic(expect))
                return false;
        }
    return true;
}

} // namespace springer
