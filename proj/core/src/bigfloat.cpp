#include "fusionforge/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace fusionforge {

namespace {

long max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }

// angle 2*pi*a/b computed with guard bits, then rounded once
BigFloat angle(long a, long b, long prec) {
    BigFloat t(prec + 16);
    mpfr_const_pi(t.get(), MPFR_RNDN);
    mpfr_mul_si(t.get(), t.get(), 2 * a, MPFR_RNDN);
    mpfr_div_si(t.get(), t.get(), b, MPFR_RNDN);
    return t;
}

}  // namespace

BigFloat BigFloat::cos_2pi(long a, long b, long prec) {
    a %= b;
    BigFloat r(prec);
    BigFloat t = angle(a, b, prec);
    mpfr_cos(r.get(), t.get(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin_2pi(long a, long b, long prec) {
    a %= b;
    BigFloat r(prec);
    BigFloat t = angle(a, b, prec);
    mpfr_sin(r.get(), t.get(), MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
BigFloat abs(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}
BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}
bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()); }

mpz_class round_to_integer(const BigFloat& a) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), a.get(), MPFR_RNDN);
    return z;
}

}  // namespace fusionforge
