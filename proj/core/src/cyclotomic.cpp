#include "fusionforge/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fusionforge {

// ---------------------------------------------------------------------------
// cyclotomic polynomials

namespace {

using ZPoly = std::vector<mpz_class>;

// exact division by a monic polynomial
ZPoly div_monic(ZPoly a, const ZPoly& b) {
    std::size_t db = b.size() - 1;
    ZPoly q(a.size() - db);
    for (std::size_t d = a.size(); d-- > db;) {
        mpz_class c = a[d];
        q[d - db] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) a[d - db + i] -= c * b[i];
    }
    return q;
}

ZPoly compose_power(const ZPoly& a, u64 e) {
    ZPoly r((a.size() - 1) * e + 1);
    for (std::size_t i = 0; i < a.size(); ++i) r[i * e] = a[i];
    return r;
}

std::vector<i64> compute_cyclotomic(u64 n) {
    ZPoly p{-1, 1};
    u64 rad = 1;
    for (u64 q : prime_divisors(n)) {
        p = div_monic(compose_power(p, q), p);
        rad *= q;
    }
    p = compose_power(p, n / rad);
    std::vector<i64> out;
    for (auto& c : p) {
        if (!c.fits_slong_p()) throw std::overflow_error("cyclotomic coefficient overflow");
        out.push_back(c.get_si());
    }
    return out;
}

struct CycloCache {
    std::shared_mutex mu;
    std::unordered_map<u64, std::unique_ptr<const std::vector<i64>>> polys;
};

CycloCache& cyclo_cache() {
    static CycloCache c;
    return c;
}

}  // namespace

const std::vector<i64>& cyclotomic_polynomial(u64 n) {
    auto& c = cyclo_cache();
    {
        std::shared_lock lk(c.mu);
        auto it = c.polys.find(n);
        if (it != c.polys.end()) return *it->second;
    }
    auto fresh = std::make_unique<const std::vector<i64>>(compute_cyclotomic(n));
    std::unique_lock lk(c.mu);
    auto [it, ok] = c.polys.try_emplace(n, std::move(fresh));
    return *it->second;
}

// ---------------------------------------------------------------------------
// CycElem internals

namespace {

// a has length n (exponents of zeta_n); returns power-basis coordinates
std::vector<mpz_class> reduce_mod_phi(u64 n, std::vector<mpz_class> a) {
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1;
    std::vector<std::pair<std::size_t, i64>> nz;
    for (std::size_t i = 0; i < deg; ++i)
        if (phi[i] != 0) nz.push_back({i, phi[i]});
    mpz_class t;
    for (std::size_t d = a.size(); d-- > deg;) {
        if (a[d] == 0) continue;
        for (auto [i, c] : nz) {
            mpz_mul_si(t.get_mpz_t(), a[d].get_mpz_t(), c);
            a[d - deg + i] -= t;
        }
        a[d] = 0;
    }
    a.resize(deg);
    return a;
}

std::vector<mpz_class> fold(u64 n, std::vector<mpz_class> a) {
    if (a.size() <= n) {
        a.resize(n);
        return a;
    }
    std::vector<mpz_class> r(n);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) r[i % n] += a[i];
    return r;
}

// scaled double images of the coordinates; used only for cheap filtering
std::vector<double> scaled_doubles(const std::vector<mpz_class>& num, long& shift) {
    long emax = LONG_MIN;
    for (auto& c : num) {
        if (c == 0) continue;
        long e;
        mpz_get_d_2exp(&e, c.get_mpz_t());
        emax = std::max(emax, e);
    }
    shift = emax == LONG_MIN ? 0 : emax;
    std::vector<double> out(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (num[i] == 0) continue;
        long e;
        double m = mpz_get_d_2exp(&e, num[i].get_mpz_t());
        out[i] = std::ldexp(m, static_cast<int>(e - shift));
    }
    return out;
}

struct NumericConjugates {
    u64 n;
    std::vector<double> c;
    std::vector<double> cs, sn;
    double scale = 0;

    NumericConjugates(u64 n_, const std::vector<mpz_class>& num) : n(n_) {
        long shift;
        c = scaled_doubles(num, shift);
        cs.resize(n);
        sn.resize(n);
        for (u64 k = 0; k < n; ++k) {
            double a = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            cs[k] = std::cos(a);
            sn[k] = std::sin(a);
        }
        for (double v : c) scale += std::fabs(v);
    }
    std::complex<double> at(u64 l) const {
        double re = 0, im = 0;
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            u64 k = (j * l) % n;
            re += c[j] * cs[k];
            im += c[j] * sn[k];
        }
        return {re, im};
    }
    double tol() const { return 1e-9 * scale * static_cast<double>(c.size() + 1); }
};

std::vector<char> membership(u64 n, const std::vector<u64>& h) {
    std::vector<char> in(n + 1, 0);
    for (u64 x : h) in[x % n == 0 && n == 1 ? 0 : x % n] = 1;
    return in;
}

std::vector<u64> generate_subgroup(u64 n, const std::vector<u64>& gens) {
    if (n <= 2) return {1};
    std::vector<char> in(n, 0);
    std::vector<u64> out{1};
    in[1] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (u64 g : gens) {
            u64 y = mulmod(out[i], g % n, n);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 rem_or_zero(u64 a, u64 m) { return m == 1 ? 0 : a % m; }

}  // namespace

CycElem::CycElem(long v) : num_{mpz_class(v)} {}
CycElem::CycElem(const Rational& q) : num_{q.get_num()}, den_(q.get_den()) {}

CycElem CycElem::reduce_dense(u64 n, std::vector<mpz_class> a, mpz_class den) {
    a = fold(n, std::move(a));
    if (n > 2 && n % 4 == 2) {
        // zeta_{2M}^e = (-1)^e zeta_M^{e(M+1)/2}
        u64 m = n / 2;
        std::vector<mpz_class> b(m);
        for (u64 e = 0; e < n; ++e) {
            if (a[e] == 0) continue;
            u64 t = (e % m) * ((m + 1) / 2) % m;
            if (e & 1) b[t] -= a[e];
            else b[t] += a[e];
        }
        n = m;
        a = std::move(b);
    } else if (n == 2) {
        a = {a[0] - a[1]};
        n = 1;
    }
    CycElem r;
    r.n_ = n;
    r.num_ = reduce_mod_phi(n, std::move(a));
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

void CycElem::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    mpz_class g = den_;
    bool zero = true;
    for (auto& c : num_) {
        if (c == 0) continue;
        zero = false;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (zero) {
        n_ = 1;
        num_ = {mpz_class(0)};
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }

    // descend to the minimal conductor
    bool moved = true;
    while (moved && n_ > 1) {
        moved = false;
        for (u64 p : prime_divisors(n_)) {
            u64 m = n_ / p;
            if (m % p == 0) {
                bool ok = true;
                for (std::size_t j = 0; j < num_.size() && ok; ++j)
                    if (j % p && num_[j] != 0) ok = false;
                if (!ok) continue;
                std::vector<mpz_class> y(num_.size() / p);
                for (std::size_t i = 0; i < y.size(); ++i) y[i] = num_[i * p];
                num_ = std::move(y);
                n_ = m;
                moved = true;
                break;
            }
            // p exactly divides n: cheap numeric test against a kernel generator
            u64 g = 1;
            for (u64 t = 1; t < p; ++t) {
                u64 cand = 1 + t * m;
                if (gcd_u(cand, n_) == 1 && mult_order(cand, n_) == p - 1) { g = cand; break; }
            }
            if (p > 2) {
                NumericConjugates nc(n_, num_);
                if (std::abs(nc.at(g) - nc.at(1)) > nc.tol()) continue;
            }
            // trace down to Q(zeta_m), re-embed, compare
            std::vector<mpz_class> y(m);
            u64 ip = m == 1 ? 0 : invmod(p % m, m);
            u64 im = invmod(m % p, p);
            for (std::size_t j = 0; j < num_.size(); ++j) {
                if (num_[j] == 0) continue;
                u64 a = m == 1 ? 0 : mulmod(j % m, ip, m);
                u64 b = mulmod(j % p, im, p);
                if (b == 0) y[a] += num_[j] * static_cast<unsigned long>(p - 1);
                else y[a] -= num_[j];
            }
            auto yc = reduce_mod_phi(m, std::move(y));
            mpz_class yden = den_ * static_cast<unsigned long>(p - 1);
            std::vector<mpz_class> back(n_);
            for (std::size_t i = 0; i < yc.size(); ++i) back[i * p] = yc[i];
            auto bc = reduce_mod_phi(n_, std::move(back));
            bool same = true;
            for (std::size_t j = 0; j < bc.size() && same; ++j)
                if (bc[j] != num_[j] * static_cast<unsigned long>(p - 1)) same = false;
            if (!same) continue;
            num_ = std::move(yc);
            n_ = m;
            for (auto& c : num_) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 1);
            den_ = yden;
            // restore lowest terms
            mpz_class gg = den_;
            for (auto& c : num_)
                if (c != 0) mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), c.get_mpz_t());
            if (gg != 1) {
                for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), gg.get_mpz_t());
                mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), gg.get_mpz_t());
            }
            moved = true;
            break;
        }
    }
}

CycElem CycElem::from_dense(u64 n, std::vector<mpz_class> a, const mpz_class& den) {
    if (n == 0) throw std::invalid_argument("conductor must be positive");
    if (den == 0) throw std::domain_error("zero denominator");
    return reduce_dense(n, std::move(a), den);
}

CycElem CycElem::from_terms(u64 n, std::span<const std::pair<i64, Rational>> terms) {
    mpz_class den = 1;
    for (auto& [e, c] : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> a(n);
    for (auto& [e, c] : terms) {
        u64 k = static_cast<u64>(mod_floor(e, static_cast<i64>(n)));
        a[k] += c.get_num() * (den / c.get_den());
    }
    return reduce_dense(n, std::move(a), den);
}

CycElem CycElem::from_coeffs(u64 n, const std::vector<Rational>& c) {
    std::vector<std::pair<i64, Rational>> t;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) t.push_back({static_cast<i64>(j), c[j]});
    return from_terms(n, t);
}

std::vector<Rational> CycElem::coeffs() const {
    std::vector<Rational> r(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) {
        r[i] = Rational(num_[i], den_);
        r[i].canonicalize();
    }
    return r;
}

bool CycElem::is_zero() const { return n_ == 1 && num_[0] == 0; }

Rational CycElem::rational_value() const {
    if (n_ != 1) throw std::logic_error("element is not rational");
    Rational q(num_[0], den_);
    q.canonicalize();
    return q;
}

std::vector<mpz_class> CycElem::dense(u64 m) const {
    if (m % n_) throw std::invalid_argument("dense: conductor does not divide target");
    std::vector<mpz_class> a(m);
    u64 s = m / n_;
    for (std::size_t j = 0; j < num_.size(); ++j) a[j * s] = num_[j];
    return a;
}

CycElem CycElem::operator-() const {
    CycElem r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycElem operator+(const CycElem& a, const CycElem& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    u64 l = lcm_u(a.n_, b.n_);
    std::vector<mpz_class> d(l);
    u64 sa = l / a.n_, sb = l / b.n_;
    for (std::size_t j = 0; j < a.num_.size(); ++j)
        if (a.num_[j] != 0) d[j * sa] += a.num_[j] * b.den_;
    for (std::size_t j = 0; j < b.num_.size(); ++j)
        if (b.num_[j] != 0) d[j * sb] += b.num_[j] * a.den_;
    return CycElem::reduce_dense(l, std::move(d), a.den_ * b.den_);
}

CycElem operator-(const CycElem& a, const CycElem& b) { return a + (-b); }

CycElem operator*(const CycElem& a, const CycElem& b) {
    if (a.is_zero() || b.is_zero()) return CycElem();
    if (a.n_ == 1 || b.n_ == 1) {
        const CycElem& r = a.n_ == 1 ? a : b;
        const CycElem& o = a.n_ == 1 ? b : a;
        CycElem out = o;
        for (auto& c : out.num_) c *= r.num_[0];
        out.den_ *= r.den_;
        out.normalize();
        return out;
    }
    u64 l = lcm_u(a.n_, b.n_);
    u64 sa = l / a.n_, sb = l / b.n_;
    std::vector<std::pair<u64, const mpz_class*>> ta, tb;
    for (std::size_t j = 0; j < a.num_.size(); ++j)
        if (a.num_[j] != 0) ta.push_back({j * sa, &a.num_[j]});
    for (std::size_t j = 0; j < b.num_.size(); ++j)
        if (b.num_[j] != 0) tb.push_back({j * sb, &b.num_[j]});
    std::vector<mpz_class> d(l);
    for (auto& [ea, ca] : ta)
        for (auto& [eb, cb] : tb) {
            u64 e = ea + eb;
            if (e >= l) e -= l;
            mpz_addmul(d[e].get_mpz_t(), ca->get_mpz_t(), cb->get_mpz_t());
        }
    return CycElem::reduce_dense(l, std::move(d), a.den_ * b.den_);
}

CycElem operator/(const CycElem& a, const CycElem& b) { return a * b.inverse(); }

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// p = q*d + r
void qdivmod(QPoly p, const QPoly& d, QPoly& q, QPoly& r) {
    trim(p);
    q.assign(p.size() >= d.size() ? p.size() - d.size() + 1 : 0, Rational(0));
    Rational lc = d.back();
    while (p.size() >= d.size()) {
        Rational c = p.back() / lc;
        std::size_t s = p.size() - d.size();
        q[s] = c;
        for (std::size_t i = 0; i < d.size(); ++i) p[s + i] -= c * d[i];
        p.pop_back();
        trim(p);
    }
    r = std::move(p);
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    QPoly r(std::max(a.size(), q.size() + b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
    trim(r);
    return r;
}

}  // namespace

CycElem CycElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    if (n_ == 1) return CycElem(Rational(den_, num_[0]));
    QPoly f;
    for (auto& c : cyclotomic_polynomial(n_)) f.push_back(Rational(c));
    QPoly g;
    for (auto& c : num_) g.push_back(Rational(c));
    trim(g);
    QPoly r0 = f, r1 = g, s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
        QPoly q, r;
        qdivmod(r0, r1, q, r);
        QPoly s2 = qsub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant: s1*g == r1 mod f
    Rational c = r1.at(0);
    std::vector<Rational> out(s1.size());
    for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] * Rational(den_) / c;
    out.resize(num_.size(), Rational(0));
    return from_coeffs(n_, out);
}

CycElem CycElem::pow(i64 e) const {
    if (e < 0) return inverse().pow(-e);
    CycElem r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

CycElem CycElem::conj() const { return galois_apply(GaloisElement(n_, -1), *this); }

std::complex<double> CycElem::approx() const {
    auto f = to_float(*this, 64);
    return {f.re.to_double(), f.im.to_double()};
}

std::string CycElem::to_string() const {
    if (n_ == 1) return rational_value().get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < num_.size(); ++j) {
        if (num_[j] == 0) continue;
        Rational c(num_[j], den_);
        c.canonicalize();
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        bool unit = a == 1;
        if (!unit || j == 0) os << a.get_str();
        if (j > 0) {
            if (!unit) os << "*";
            os << "z" << n_;
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

CycElem add(const CycElem& a, const CycElem& b) { return a + b; }
CycElem mul(const CycElem& a, const CycElem& b) { return a * b; }
CycElem neg(const CycElem& a) { return -a; }
CycElem inv(const CycElem& a) { return a.inverse(); }

CycElem root_of_unity(u64 n, i64 k) {
    if (n == 0) throw std::invalid_argument("root_of_unity: N must be positive");
    std::vector<mpz_class> a(n);
    a[static_cast<u64>(mod_floor(k, static_cast<i64>(n)))] = 1;
    return CycElem::from_dense(n, std::move(a));
}

CycElem cos_pi_frac(i64 a, u64 b) {
    if (b == 0) throw std::invalid_argument("cos_pi_frac: b must be positive");
    u64 n = 2 * b;
    std::vector<mpz_class> d(n);
    d[static_cast<u64>(mod_floor(a, static_cast<i64>(n)))] += 1;
    d[static_cast<u64>(mod_floor(-a, static_cast<i64>(n)))] += 1;
    return CycElem::from_dense(n, std::move(d), 2);
}

CycElem quantum_integer(i64 n, u64 m) {
    if (m == 0 || n < 1 || static_cast<u64>(n) >= m)
        throw std::out_of_range("quantum_integer: need 1 <= n < m");
    u64 N = 2 * m;
    std::vector<mpz_class> d(N);
    for (i64 j = 0; j < n; ++j) d[static_cast<u64>(mod_floor(n - 1 - 2 * j, static_cast<i64>(N)))] += 1;
    return CycElem::from_dense(N, std::move(d));
}

namespace {

CycElem sqrt_prime(u64 p) {
    if (p == 2) return root_of_unity(8, 1) + root_of_unity(8, -1);
    std::vector<mpz_class> d(p);
    for (u64 a = 1; a < p; ++a) d[a] = powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
    CycElem g = CycElem::from_dense(p, std::move(d));
    if (p % 4 == 1) return g;
    return -(root_of_unity(4, 1) * g);
}

}  // namespace

CycElem sqrt_rational(const Rational& r) {
    if (r < 0) throw std::domain_error("sqrt_rational: negative argument");
    if (r == 0) return CycElem();
    mpz_class v = r.get_num() * r.get_den();
    mpz_class out = 1;
    CycElem root(1);
    for (unsigned long p = 2; p < 1000000 && v > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(v.get_mpz_t(), p) == 0) continue;
        int e = 0;
        while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) out *= p;
        if (e % 2) root *= sqrt_prime(p);
    }
    if (v > 1) {
        if (mpz_perfect_square_p(v.get_mpz_t())) {
            mpz_class s;
            mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
            out *= s;
        } else if (v.fits_ulong_p() && is_prime(v.get_ui())) {
            root *= sqrt_prime(v.get_ui());
        } else {
            throw std::domain_error("sqrt_rational: could not factor radicand");
        }
    }
    return root * CycElem(Rational(out, r.get_den()));
}

// ---------------------------------------------------------------------------
// Galois action

GaloisElement::GaloisElement(u64 m, i64 u) : modulus(m) {
    if (m == 0) throw std::invalid_argument("Galois modulus must be positive");
    unit = static_cast<u64>(mod_floor(u, static_cast<i64>(m)));
    if (m == 1) unit = 1;
    else if (gcd_u(unit, m) != 1) throw std::invalid_argument("Galois unit not coprime to modulus");
}

CycElem galois_apply(const GaloisElement& s, const CycElem& x) {
    u64 n = x.conductor();
    if (s.modulus % n) throw std::invalid_argument("galois_apply: modulus is not a multiple of the conductor");
    if (n == 1) return x;
    u64 l = s.unit % n;
    const auto& num = x.numerators();
    std::vector<mpz_class> d(n);
    for (std::size_t j = 0; j < num.size(); ++j)
        if (num[j] != 0) d[mulmod(j, l, n)] = num[j];
    return CycElem::from_dense(n, std::move(d), x.denominator());
}

std::vector<u64> stabilizer_of(const CycElem& x) {
    u64 n = x.conductor();
    if (n == 1) return {1};
    NumericConjugates nc(n, x.numerators());
    auto base = nc.at(1);
    auto units = units_mod(n);
    std::vector<u64> cand;
    for (u64 l : units)
        if (std::abs(nc.at(l) - base) <= nc.tol()) cand.push_back(l);
    std::vector<u64> h{1};
    std::vector<u64> gens;
    for (u64 l : cand) {
        if (std::binary_search(h.begin(), h.end(), l)) continue;
        if (galois_apply(GaloisElement(n, static_cast<i64>(l)), x) == x) {
            gens.push_back(l);
            h = generate_subgroup(n, gens);
        }
    }
    for (u64 l : h)
        if (!std::binary_search(cand.begin(), cand.end(), l)) {
            // numeric filter was too tight; fall back to the exhaustive check
            h.clear();
            for (u64 u : units)
                if (galois_apply(GaloisElement(n, static_cast<i64>(u)), x) == x) h.push_back(u);
            return h;
        }
    return h;
}

// ---------------------------------------------------------------------------
// subfields

SubfieldHandle subfield_from_stabilizer(u64 n, std::vector<u64> h) {
    if (n <= 2) return rational_field();
    for (auto& x : h) x %= n;
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    bool moved = true;
    while (moved && n > 2) {
        moved = false;
        auto in = membership(n, h);
        for (u64 p : prime_divisors(n)) {
            u64 m = n / p;
            bool ok = true;
            for (u64 t = 0; t < p && ok; ++t) {
                u64 l = 1 + t * m;
                if (gcd_u(l, n) == 1 && !in[l % n]) ok = false;
            }
            if (!ok) continue;
            std::vector<u64> nh;
            for (u64 x : h) nh.push_back(m <= 2 ? 1 : x % m);
            std::sort(nh.begin(), nh.end());
            nh.erase(std::unique(nh.begin(), nh.end()), nh.end());
            h = std::move(nh);
            n = m;
            moved = true;
            break;
        }
    }
    if (n <= 2) return rational_field();
    return SubfieldHandle{n, std::move(h)};
}

SubfieldHandle rational_field() { return SubfieldHandle{1, {1}}; }

SubfieldHandle cyclotomic_field(u64 n) { return subfield_from_stabilizer(n, {1}); }

SubfieldHandle real_cyclotomic(u64 n) {
    if (n == 0) throw std::invalid_argument("real_cyclotomic: n must be positive");
    if (n <= 2) return rational_field();
    return subfield_from_stabilizer(n, {1, n - 1});
}

SubfieldHandle field_generated_by(const CycElem& x) {
    return subfield_from_stabilizer(x.conductor(), stabilizer_of(x));
}

SubfieldHandle quantum_integer_field(i64 n, u64 m) {
    if (n <= 0 || static_cast<u64>(n) >= m) throw std::out_of_range("quantum_integer_field: need 0 < n < m");
    if (n == 1 || static_cast<u64>(n) == m - 1) return rational_field();
    if (n % 2 == 0) return real_cyclotomic(2 * m);
    return real_cyclotomic(m);
}

std::vector<u64> stabilizer_at(const SubfieldHandle& f, u64 m) {
    if (m % f.conductor) throw std::invalid_argument("stabilizer_at: not a multiple of the conductor");
    auto units = units_mod(m);
    if (f.conductor <= 2) return units;
    std::vector<u64> out;
    for (u64 l : units)
        if (std::binary_search(f.stabilizer.begin(), f.stabilizer.end(), l % f.conductor)) out.push_back(l);
    return out;
}

bool field_eq(const SubfieldHandle& f, const SubfieldHandle& g) {
    return subfield_leq(f, g) && subfield_leq(g, f);
}

bool subfield_leq(const SubfieldHandle& f, const SubfieldHandle& g) {
    u64 l = lcm_u(f.conductor, g.conductor);
    auto hf = stabilizer_at(f, l);
    auto hg = stabilizer_at(g, l);
    return std::includes(hf.begin(), hf.end(), hg.begin(), hg.end());
}

SubfieldHandle field_join(const SubfieldHandle& f, const SubfieldHandle& g) {
    u64 l = lcm_u(f.conductor, g.conductor);
    auto hf = stabilizer_at(f, l);
    auto hg = stabilizer_at(g, l);
    std::vector<u64> h;
    std::set_intersection(hf.begin(), hf.end(), hg.begin(), hg.end(), std::back_inserter(h));
    return subfield_from_stabilizer(l, std::move(h));
}

SubfieldHandle field_meet(const SubfieldHandle& f, const SubfieldHandle& g) {
    u64 l = lcm_u(f.conductor, g.conductor);
    auto hf = stabilizer_at(f, l);
    auto hg = stabilizer_at(g, l);
    hf.insert(hf.end(), hg.begin(), hg.end());
    return subfield_from_stabilizer(l, generate_subgroup(l, hf));
}

u64 field_degree(const SubfieldHandle& f) {
    if (f.conductor <= 2) return 1;
    return euler_phi(f.conductor) / f.stabilizer.size();
}

bool contains(const SubfieldHandle& f, const CycElem& x) {
    u64 n = x.conductor();
    if (n == 1) return true;
    u64 l = lcm_u(f.conductor, n);
    auto h = stabilizer_at(f, l);
    // image in (Z/nZ)^x, then check a generating set exactly
    std::vector<u64> img;
    for (u64 t : h) img.push_back(rem_or_zero(t, n));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    std::vector<u64> gens, sub{1};
    for (u64 t : img) {
        if (std::binary_search(sub.begin(), sub.end(), t)) continue;
        if (!(galois_apply(GaloisElement(n, static_cast<i64>(t)), x) == x)) return false;
        gens.push_back(t);
        sub = generate_subgroup(n, gens);
    }
    return true;
}

u64 field_exponent(const SubfieldHandle& f) {
    u64 n = f.conductor;
    if (n <= 2) return 1;
    auto in = membership(n, f.stabilizer);
    u64 best = 1;
    for (u64 l : units_mod(n)) {
        u64 t = 1, y = l;
        while (!in[y]) {
            y = mulmod(y, l, n);
            ++t;
        }
        best = std::max(best, t);
    }
    return best;
}

bool is_real_field(const SubfieldHandle& f) {
    return f.conductor <= 2 ||
           std::binary_search(f.stabilizer.begin(), f.stabilizer.end(), f.conductor - 1);
}

std::string describe(const SubfieldHandle& f) {
    if (f.conductor == 1) return "Q";
    u64 n = f.conductor;
    u64 d = field_degree(f);
    if (d == 2) {
        i64 disc = static_cast<i64>(n);
        i64 sq = n % 4 == 0 ? disc / 4 : disc;
        if (!is_real_field(f)) sq = -sq;
        return "Q(sqrt(" + std::to_string(sq) + "))";
    }
    if (f == real_cyclotomic(n)) return "Q_" + std::to_string(n);
    if (f == cyclotomic_field(n)) return "Q(zeta_" + std::to_string(n) + ")";
    if (n % 2 == 1 && f == real_cyclotomic(2 * n)) return "Q_" + std::to_string(n);
    if (field_exponent(f) == 2) {
        // multiquadratic: join square roots of squarefree divisors until f is reached
        std::vector<i64> radicands;
        SubfieldHandle reached = rational_field();
        for (u64 m : divisors(n))
            for (i64 sign : {1, -1}) {
                if (m == 1 && sign == 1) continue;
                if (mobius(m) == 0) continue;
                i64 r = sign * static_cast<i64>(m);
                CycElem root = sqrt_rational(Rational(static_cast<i64>(m)));
                if (sign < 0) root = root * root_of_unity(4, 1);
                SubfieldHandle q = field_generated_by(root);
                if (!subfield_leq(q, f) || subfield_leq(q, reached)) continue;
                reached = field_join(reached, q);
                radicands.push_back(r);
            }
        if (reached == f) {
            std::string out = "Q(";
            for (std::size_t i = 0; i < radicands.size(); ++i)
                out += (i ? ", sqrt(" : "sqrt(") + std::to_string(radicands[i]) + ")";
            return out + ")";
        }
    }
    std::ostringstream os;
    os << "F(cond " << n << ", deg " << d << ", stab {";
    for (std::size_t i = 0; i < f.stabilizer.size(); ++i) os << (i ? "," : "") << f.stabilizer[i];
    os << "})";
    return os.str();
}

// ---------------------------------------------------------------------------
// certified floating evaluation

FloatApprox to_float(const CycElem& x, long precision) {
    if (precision < 2) precision = 2;
    if (x.is_zero()) return {BigFloat(precision), BigFloat(precision)};
    const auto& num = x.numerators();
    u64 n = x.conductor();
    std::size_t nnz = 0;
    for (auto& c : num) nnz += c != 0;
    long w = precision + 24 + static_cast<long>(std::log2(static_cast<double>(nnz) + 1));
    while (true) {
        BigFloat re(w), im(w), mag(w);
        BigFloat den(x.denominator(), w);
        for (std::size_t j = 0; j < num.size(); ++j) {
            if (num[j] == 0) continue;
            BigFloat c = BigFloat(num[j], w) / den;
            re = re + c * BigFloat::cos_2pi(static_cast<long>(j), static_cast<long>(n), w);
            im = im + c * BigFloat::sin_2pi(static_cast<long>(j), static_cast<long>(n), w);
            mag = mag + abs(c);
        }
        // every rounding is relative 2^-w; allow (nnz + 8) of them on the magnitude sum
        BigFloat err = mag * BigFloat(std::ldexp(static_cast<double>(nnz + 8), static_cast<int>(-w + 1)), w);
        BigFloat val = sqrt(re * re + im * im);
        BigFloat tolr = (val - err) * BigFloat(std::ldexp(1.0, static_cast<int>(-precision - 1)), w);
        if (err < tolr) {
            FloatApprox out{BigFloat(precision), BigFloat(precision)};
            mpfr_set(out.re.get(), re.get(), MPFR_RNDN);
            mpfr_set(out.im.get(), im.get(), MPFR_RNDN);
            return out;
        }
        if (w > (1L << 20)) throw std::runtime_error("to_float: precision escalation limit");
        w *= 2;
    }
}

}  // namespace fusionforge
