#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace springer {

/* Exact arithmetic in Z[zeta_e]: values are integer polynomials in zeta_e
 * reduced modulo the e-th cyclotomic polynomial, so equality of coefficient
 * vectors is equality of values.  Coefficients are 64-bit; the sizes used
 * here (character values of groups of order a few hundred) stay far from
 * overflow.
 */
class Cyclotomic {
public:
    Cyclotomic() : e_(1), c_{0} {}
    explicit Cyclotomic(long long n) : e_(1), c_{n} {}
    // zeta_e^k
    static Cyclotomic root_of_unity(int e, long long k);

    int conductor() const { return e_; }
    const std::vector<long long>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_integer() const; // lies in Z
    long long integer_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    bool operator<(const Cyclotomic& o) const; // arbitrary total order

    // complex conjugate (zeta -> zeta^-1)
    Cyclotomic conj() const;

    // value in the larger field Q(zeta_E); e must divide E
    Cyclotomic rebase(int E) const;

    std::string to_string() const;

private:
    Cyclotomic(int e, std::vector<long long> c) : e_(e), c_(std::move(c)) {}
    void reduce();

    int e_;
    std::vector<long long> c_; // length phi(e) after reduction
};

// e-th cyclotomic polynomial (monic, integer coefficients, ascending)
const std::vector<long long>& cyclotomic_polynomial(int e);

} // namespace springer
