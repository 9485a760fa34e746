#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fusionforge/bigfloat.hpp"
#include "fusionforge/numtheory.hpp"

namespace fusionforge {

using Rational = mpq_class;

// N-th cyclotomic polynomial, monic, coefficients low to high.
const std::vector<i64>& cyclotomic_polynomial(u64 n);

// Element of Q(zeta_N) on the power basis mod Phi_N.  Always stored at its
// minimal conductor, so structural equality is field equality.
class CycElem {
public:
    CycElem() = default;
    CycElem(long v);
    explicit CycElem(const Rational& q);

    // sum_k c_k zeta_n^{e_k}, exponents taken mod n
    static CycElem from_terms(u64 n, std::span<const std::pair<i64, Rational>> terms);
    // length-n integer vector a_e meaning sum_e a_e zeta_n^e, scaled by 1/den
    static CycElem from_dense(u64 n, std::vector<mpz_class> a, const mpz_class& den = 1);
    // coefficients on the power basis of Q(zeta_n), length phi(n)
    static CycElem from_coeffs(u64 n, const std::vector<Rational>& c);

    u64 conductor() const { return n_; }
    std::vector<Rational> coeffs() const;
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    Rational rational_value() const;  // requires is_rational()

    // spread onto exponents of zeta_m, m a multiple of conductor
    std::vector<mpz_class> dense(u64 m) const;

    CycElem operator-() const;
    friend CycElem operator+(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a, const CycElem& b);
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    friend CycElem operator/(const CycElem& a, const CycElem& b);
    CycElem& operator+=(const CycElem& b) { return *this = *this + b; }
    CycElem& operator-=(const CycElem& b) { return *this = *this - b; }
    CycElem& operator*=(const CycElem& b) { return *this = *this * b; }
    friend bool operator==(const CycElem& a, const CycElem& b) {
        return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
    }

    CycElem inverse() const;  // throws std::domain_error on zero
    CycElem pow(i64 e) const;
    CycElem conj() const;

    std::complex<double> approx() const;
    std::string to_string() const;

private:
    u64 n_ = 1;
    std::vector<mpz_class> num_{mpz_class(0)};
    mpz_class den_ = 1;

    void normalize();
    static CycElem reduce_dense(u64 n, std::vector<mpz_class> a, mpz_class den);
};

CycElem add(const CycElem& a, const CycElem& b);
CycElem mul(const CycElem& a, const CycElem& b);
CycElem neg(const CycElem& a);
CycElem inv(const CycElem& a);

CycElem root_of_unity(u64 n, i64 k);
CycElem cos_pi_frac(i64 a, u64 b);
CycElem quantum_integer(i64 n, u64 m);
// positive square root of a positive rational, built from Gauss sums
CycElem sqrt_rational(const Rational& r);

struct GaloisElement {
    u64 modulus = 1;
    u64 unit = 1;

    GaloisElement() = default;
    GaloisElement(u64 modulus, i64 unit);
};

CycElem galois_apply(const GaloisElement& s, const CycElem& x);

// { l in (Z/NZ)^x : sigma_l(x) = x } at N = x.conductor()
std::vector<u64> stabilizer_of(const CycElem& x);

struct SubfieldHandle {
    u64 conductor = 1;
    std::vector<u64> stabilizer{1};

    friend bool operator==(const SubfieldHandle&, const SubfieldHandle&) = default;
    friend auto operator<=>(const SubfieldHandle&, const SubfieldHandle&) = default;
};

// canonical handle for the fixed field of h inside Q(zeta_n)
SubfieldHandle subfield_from_stabilizer(u64 n, std::vector<u64> h);
SubfieldHandle rational_field();
SubfieldHandle cyclotomic_field(u64 n);
SubfieldHandle real_cyclotomic(u64 n);
SubfieldHandle field_generated_by(const CycElem& x);
SubfieldHandle quantum_integer_field(i64 n, u64 m);

bool field_eq(const SubfieldHandle& f, const SubfieldHandle& g);
bool subfield_leq(const SubfieldHandle& f, const SubfieldHandle& g);
SubfieldHandle field_join(const SubfieldHandle& f, const SubfieldHandle& g);
SubfieldHandle field_meet(const SubfieldHandle& f, const SubfieldHandle& g);
u64 field_degree(const SubfieldHandle& f);
bool contains(const SubfieldHandle& f, const CycElem& x);
// exponent of Gal(F/Q)
u64 field_exponent(const SubfieldHandle& f);
bool is_real_field(const SubfieldHandle& f);
// preimage of the stabilizer in (Z/mZ)^x, m a multiple of the conductor
std::vector<u64> stabilizer_at(const SubfieldHandle& f, u64 m);

std::string describe(const SubfieldHandle& f);

struct FloatApprox {
    BigFloat re, im;
};

// |error| <= 2^(1-precision) * |x| componentwise in modulus; zero is exact
FloatApprox to_float(const CycElem& x, long precision);

}  // namespace fusionforge
