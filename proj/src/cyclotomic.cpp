#include "springer/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace springer {

namespace {

// polynomial long division remainder, divisor monic
std::vector<long long> poly_mod(std::vector<long long> a, const std::vector<long long>& m)
{
    int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) > dm) {
        long long lead = a.back();
        int shift = static_cast<int>(a.size()) - 1 - dm;
        if (lead != 0)
            for (int i = 0; i <= dm; i++)
                a[shift + i] -= lead * m[i];
        a.pop_back();
    }
    return a;
}

std::vector<long long> poly_divide_exact(const std::vector<long long>& num,
                                         const std::vector<long long>& den)
{
    // exact division of integer polynomials, den monic
    std::vector<long long> rem = num;
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<long long> q(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; k--) {
        long long c = rem[k + dd];
        q[k] = c;
        for (int i = 0; i <= dd; i++)
            rem[k + i] -= c * den[i];
    }
    for (long long c : rem)
        if (c != 0)
            throw std::logic_error("poly_divide_exact: division not exact");
    return q;
}

} // namespace

const std::vector<long long>& cyclotomic_polynomial(int e)
{
    static std::map<int, std::vector<long long>> cache;
    auto it = cache.find(e);
    if (it != cache.end())
        return it->second;
    // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d
    std::vector<long long> num(e + 1, 0);
    num[0] = -1;
    num[e] = 1;
    for (int d = 1; d < e; d++)
        if (e % d == 0)
            num = poly_divide_exact(num, cyclotomic_polynomial(d));
    return cache.emplace(e, std::move(num)).first->second;
}

void Cyclotomic::reduce()
{
    c_ = poly_mod(std::move(c_), cyclotomic_polynomial(e_));
    c_.resize(cyclotomic_polynomial(e_).size() - 1, 0);
}

Cyclotomic Cyclotomic::root_of_unity(int e, long long k)
{
    if (e < 1)
        throw std::invalid_argument("root_of_unity: e >= 1");
    k = ((k % e) + e) % e;
    std::vector<long long> c(k + 1, 0);
    c[k] = 1;
    Cyclotomic z(e, std::move(c));
    z.reduce();
    return z;
}

bool Cyclotomic::is_zero() const
{
    for (long long x : c_)
        if (x != 0)
            return false;
    return true;
}

bool Cyclotomic::is_integer() const
{
    for (size_t i = 1; i < c_.size(); i++)
        if (c_[i] != 0)
            return false;
    return true;
}

long long Cyclotomic::integer_value() const
{
    if (!is_integer())
        throw std::logic_error("integer_value: not an integer");
    return c_.empty() ? 0 : c_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const
{
    int E = std::lcm(e_, o.e_);
    Cyclotomic a = rebase(E), b = o.rebase(E);
    for (size_t i = 0; i < a.c_.size(); i++)
        a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const
{
    return *this + (-o);
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic a = *this;
    for (auto& x : a.c_)
        x = -x;
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const
{
    int E = std::lcm(e_, o.e_);
    Cyclotomic a = rebase(E), b = o.rebase(E);
    std::vector<long long> prod(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); i++) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); j++)
            prod[i + j] += a.c_[i] * b.c_[j];
    }
    Cyclotomic r(E, std::move(prod));
    r.reduce();
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const
{
    int E = std::lcm(e_, o.e_);
    return rebase(E).c_ == o.rebase(E).c_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const
{
    int E = std::lcm(e_, o.e_);
    return rebase(E).c_ < o.rebase(E).c_;
}

Cyclotomic Cyclotomic::conj() const
{
    Cyclotomic r(e_, std::vector<long long>(c_.size(), 0));
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i] == 0) continue;
        Cyclotomic t = root_of_unity(e_, -static_cast<long long>(i));
        for (auto& x : t.c_)
            x *= c_[i];
        r = r + t;
    }
    return r;
}

Cyclotomic Cyclotomic::rebase(int E) const
{
    if (E == e_)
        return *this;
    if (E % e_ != 0)
        throw std::invalid_argument("rebase: conductor must divide target");
    int scale = E / e_;
    std::vector<long long> c(static_cast<size_t>(e_) * scale, 0);
    for (size_t i = 0; i < c_.size(); i++)
        c[i * scale] = c_[i];
    Cyclotomic r(E, std::move(c));
    r.reduce();
    return r;
}

std::string Cyclotomic::to_string() const
{
    if (is_integer())
        return std::to_string(c_.empty() ? 0 : c_[0]);
    std::string s;
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i] == 0) continue;
        if (!s.empty())
            s += c_[i] > 0 ? "+" : "";
        if (i == 0) {
            s += std::to_string(c_[i]);
        } else {
            if (c_[i] == -1)
                s += "-";
            else if (c_[i] != 1)
                s += std::to_string(c_[i]) + "*";
            s += "z" + std::to_string(e_);
            if (i > 1)
                s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace springer
