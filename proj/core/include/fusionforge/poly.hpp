#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fusionforge/bigfloat.hpp"
#include "fusionforge/numtheory.hpp"

namespace fusionforge {

// Dense integer polynomial, coefficients low to high, no trailing zeros
// (the zero polynomial is empty).
using ZPoly = std::vector<mpz_class>;
using ZMatrix = std::vector<std::vector<mpz_class>>;

int degree(const ZPoly& f);
void trim(ZPoly& f);
ZPoly derivative(const ZPoly& f);
mpz_class content(const ZPoly& f);
// content removed, leading coefficient positive
ZPoly primitive_part(const ZPoly& f);
ZPoly poly_mul(const ZPoly& a, const ZPoly& b);
ZPoly poly_sub(const ZPoly& a, const ZPoly& b);
// exact quotient over Z, or false if b does not divide a
bool poly_divides(const ZPoly& a, const ZPoly& b, ZPoly* quotient = nullptr);
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);
ZPoly squarefree_part(const ZPoly& f);
int sign_at(const ZPoly& f, const mpq_class& x);
mpq_class eval(const ZPoly& f, const mpq_class& x);
BigFloat eval(const ZPoly& f, const BigFloat& x);
std::string poly_to_string(const ZPoly& f, const char* var = "x");

// det(xI - A) by Berkowitz's division-free recurrence
ZPoly charpoly(const ZMatrix& a);

// Irreducible factors of a squarefree primitive polynomial over Z
// (Zassenhaus: modular factorization, Hensel lifting, recombination).
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

// Sturm-sequence real root machinery for squarefree f.
class SturmChain {
public:
    explicit SturmChain(const ZPoly& f);
    int variations(const mpq_class& x) const;
    // roots in (a, b]
    int count(const mpq_class& a, const mpq_class& b) const;
    mpq_class root_bound() const;  // every real root lies in (-B, B)
    const ZPoly& poly() const { return chain_.front(); }

private:
    std::vector<ZPoly> chain_;
};

struct RootInterval {
    mpq_class lo, hi;  // half-open (lo, hi]
};

// f mod p for an odd prime p not dividing the leading coefficient
bool squarefree_mod(const ZPoly& f, u64 p);
// t^e mod (f, p), coefficients in [0, p)
ZPoly x_power_mod(const ZPoly& f, const mpz_class& e, u64 p);
// distinct roots of f in F_p, ascending
std::vector<u64> roots_mod(const ZPoly& f, u64 p);

std::vector<RootInterval> isolate_real_roots(const ZPoly& f);
RootInterval refine(const SturmChain& s, RootInterval iv, const mpq_class& width);

}  // namespace fusionforge
