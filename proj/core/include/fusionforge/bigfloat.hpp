#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace fusionforge {

// Value-semantic owner of an mpfr_t.  Arithmetic rounds to nearest at the
// precision of the destination.
class BigFloat {
public:
    explicit BigFloat(long prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(double d, long prec) : BigFloat(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(const mpz_class& z, long prec) : BigFloat(prec) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    BigFloat(const mpq_class& q, long prec) : BigFloat(prec) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept : BigFloat(2) { mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    // cos(2 pi a / b), sin(2 pi a / b)
    static BigFloat cos_2pi(long a, long b, long prec);
    static BigFloat sin_2pi(long a, long b, long prec);

    std::string to_string(int digits) const;

private:
    mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
bool operator<(const BigFloat& a, const BigFloat& b);

// nearest integer
mpz_class round_to_integer(const BigFloat& a);

}  // namespace fusionforge
