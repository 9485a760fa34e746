#include "fusionforge/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fusionforge {

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly derivative(const ZPoly& f) {
    ZPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

mpz_class content(const ZPoly& f) {
    mpz_class g = 0;
    for (auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

namespace {

// divide by the positive content, keep signs
ZPoly drop_content(ZPoly f) {
    mpz_class g = content(f);
    if (g > 1)
        for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return f;
}

// |lc(b)|^(deg a - deg b + 1) * a mod b
ZPoly prem_positive(ZPoly a, const ZPoly& b) {
    int db = degree(b);
    int da = degree(a);
    if (da < db) return a;
    int steps = da - db + 1;
    const mpz_class& lb = b.back();
    for (int s = 0; s < steps; ++s) {
        int top = da - s;
        mpz_class lead = a[top];
        for (auto& c : a) c *= lb;
        if (lead != 0)
            for (int i = 0; i <= db; ++i) a[i + top - db] -= lead * b[i];
    }
    trim(a);
    if (lb < 0 && steps % 2 == 1)
        for (auto& c : a) c = -c;
    return a;
}

}  // namespace

ZPoly primitive_part(const ZPoly& f) {
    ZPoly r = drop_content(f);
    if (!r.empty() && r.back() < 0)
        for (auto& c : r) c = -c;
    return r;
}

ZPoly poly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

ZPoly poly_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

bool poly_divides(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
    if (b.empty()) throw std::domain_error("poly_divides: zero divisor");
    ZPoly r = a;
    trim(r);
    int db = degree(b);
    ZPoly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0);
    while (degree(r) >= db) {
        if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return false;
        mpz_class c = r.back() / b.back();
        int s = degree(r) - db;
        q[s] = c;
        for (int i = 0; i <= db; ++i) r[s + i] -= c * b[i];
        trim(r);
    }
    if (!r.empty()) return false;
    if (quotient) {
        trim(q);
        *quotient = std::move(q);
    }
    return true;
}

ZPoly poly_gcd(const ZPoly& a0, const ZPoly& b0) {
    ZPoly a = primitive_part(a0), b = primitive_part(b0);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = drop_content(prem_positive(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(a);
}

ZPoly squarefree_part(const ZPoly& f) {
    ZPoly g = poly_gcd(f, derivative(f));
    ZPoly q;
    if (degree(g) <= 0) return primitive_part(f);
    if (!poly_divides(primitive_part(f), g, &q)) throw std::logic_error("squarefree_part: gcd does not divide");
    return primitive_part(q);
}

int sign_at(const ZPoly& f, const mpq_class& x) {
    // den^deg * f(num/den)
    const mpz_class& n = x.get_num();
    const mpz_class& d = x.get_den();
    mpz_class acc = 0, dp = 1;
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = acc * n + f[i] * dp;
        dp *= d;
    }
    return sgn(acc);
}

mpq_class eval(const ZPoly& f, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

BigFloat eval(const ZPoly& f, const BigFloat& x) {
    BigFloat acc(x.prec());
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + BigFloat(f[i], x.prec());
    return acc;
}

std::string poly_to_string(const ZPoly& f, const char* var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        mpz_class c = f[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        mpz_class a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

ZPoly charpoly(const ZMatrix& a) {
    std::size_t n = a.size();
    if (n == 0) return {mpz_class(1)};
    // coefficients high to low
    std::vector<mpz_class> p{1, -a[0][0]};
    for (std::size_t r = 1; r < n; ++r) {
        // t = [1, -a_rr, -R C, -R B C, ..., -R B^{r-1} C]
        std::vector<mpz_class> t(r + 2);
        t[0] = 1;
        t[1] = -a[r][r];
        std::vector<mpz_class> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];
        for (std::size_t k = 2; k < r + 2; ++k) {
            mpz_class s = 0;
            for (std::size_t i = 0; i < r; ++i) mpz_addmul(s.get_mpz_t(), a[r][i].get_mpz_t(), v[i].get_mpz_t());
            t[k] = -s;
            if (k + 1 < r + 2) {
                std::vector<mpz_class> w(r);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        if (a[i][j] != 0) mpz_addmul(w[i].get_mpz_t(), a[i][j].get_mpz_t(), v[j].get_mpz_t());
                v = std::move(w);
            }
        }
        std::vector<mpz_class> np(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                if (p[j] != 0) mpz_addmul(np[i].get_mpz_t(), t[i - j].get_mpz_t(), p[j].get_mpz_t());
        p = std::move(np);
    }
    std::reverse(p.begin(), p.end());
    trim(p);
    return p;
}

// ---------------------------------------------------------------------------
// polynomials over F_p, p < 2^62

namespace {

using FPoly = std::vector<u64>;

struct Fp {
    u64 p;

    u64 mm(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
    void trim(FPoly& f) const {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    FPoly from(const ZPoly& f) const {
        FPoly r(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            mpz_class m;
            mpz_fdiv_r_ui(m.get_mpz_t(), f[i].get_mpz_t(), p);
            r[i] = m.get_ui();
        }
        trim(r);
        return r;
    }
    FPoly mul(const FPoly& a, const FPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mm(a[i], b[j])) % p;
        }
        trim(r);
        return r;
    }
    FPoly sub(const FPoly& a, const FPoly& b) const {
        FPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
        trim(r);
        return r;
    }
    FPoly add(const FPoly& a, const FPoly& b) const {
        FPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
        trim(r);
        return r;
    }
    FPoly scale(FPoly a, u64 c) const {
        for (auto& x : a) x = mm(x, c);
        trim(a);
        return a;
    }
    void divmod(FPoly a, const FPoly& b, FPoly& q, FPoly& r) const {
        trim(a);
        u64 il = invmod(b.back(), p);
        q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
        while (a.size() >= b.size() && !a.empty()) {
            u64 c = mm(a.back(), il);
            std::size_t s = a.size() - b.size();
            q[s] = c;
            for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = (a[s + i] + p - mm(c, b[i])) % p;
            trim(a);
        }
        r = std::move(a);
        trim(q);
    }
    FPoly rem(const FPoly& a, const FPoly& b) const {
        FPoly q, r;
        divmod(a, b, q, r);
        return r;
    }
    FPoly monic(FPoly a) const {
        if (a.empty()) return a;
        return scale(std::move(a), invmod(a.back(), p));
    }
    FPoly gcd(FPoly a, FPoly b) const {
        while (!b.empty()) {
            FPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(std::move(a));
    }
    // s*a + t*b = 1 assuming coprime
    void xgcd(const FPoly& a, const FPoly& b, FPoly& s, FPoly& t) const {
        FPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            FPoly q, r;
            divmod(r0, r1, q, r);
            FPoly s2 = sub(s0, mul(q, s1));
            FPoly t2 = sub(t0, mul(q, t1));
            r0 = std::move(r1); r1 = std::move(r);
            s0 = std::move(s1); s1 = std::move(s2);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        u64 il = invmod(r0.at(0), p);
        s = scale(s0, il);
        t = scale(t0, il);
    }
    FPoly powmod(FPoly b, const mpz_class& e, const FPoly& m) const {
        FPoly r{1};
        b = rem(b, m);
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            r = rem(mul(r, r), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, b), m);
        }
        return r;
    }
    FPoly derivative(const FPoly& f) const {
        FPoly d;
        for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mm(f[i], i % p));
        trim(d);
        return d;
    }
};

// distinct-degree factorization of a monic squarefree f
std::vector<std::pair<FPoly, int>> ddf(const Fp& F, FPoly f) {
    std::vector<std::pair<FPoly, int>> out;
    FPoly h{0, 1};
    const FPoly x{0, 1};
    for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
        h = F.powmod(h, mpz_class(F.p), f);
        FPoly g = F.gcd(f, F.sub(h, x));
        if (g.size() > 1) {
            out.push_back({g, i});
            FPoly q, r;
            F.divmod(f, g, q, r);
            f = q;
            h = F.rem(h, f);
        }
    }
    if (f.size() > 1) out.push_back({F.monic(f), static_cast<int>(f.size()) - 1});
    return out;
}

void edf(const Fp& F, const FPoly& g, int d, std::mt19937_64& rng, std::vector<FPoly>& out) {
    int n = static_cast<int>(g.size()) - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
    e = (e - 1) / 2;
    while (true) {
        FPoly a(n);
        for (auto& c : a) c = rng() % F.p;
        F.trim(a);
        if (a.size() < 2) continue;
        FPoly b = F.sub(F.powmod(a, e, g), FPoly{1});
        FPoly h = F.gcd(g, b);
        int dh = static_cast<int>(h.size()) - 1;
        if (dh > 0 && dh < n) {
            FPoly q, r;
            F.divmod(g, h, q, r);
            edf(F, h, d, rng, out);
            edf(F, F.monic(q), d, rng, out);
            return;
        }
    }
}

ZPoly to_z(const FPoly& f) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
    return r;
}

void mod_sym(ZPoly& f, const mpz_class& m) {
    mpz_class half = m / 2;
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    trim(f);
}

void mod_pos(ZPoly& f, const mpz_class& m) {
    for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(f);
}

// f = g*h mod p with g monic; lift to mod p^k
void hensel_pair(const ZPoly& f, const FPoly& g, const FPoly& h, const Fp& F, int k, ZPoly& G, ZPoly& H) {
    FPoly s, t;
    F.xgcd(g, h, s, t);
    G = to_z(g);
    H = to_z(h);
    mpz_class pj = static_cast<unsigned long>(F.p);
    for (int j = 1; j < k; ++j) {
        ZPoly e = poly_sub(f, poly_mul(G, H));
        for (auto& c : e) {
            if (!mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t())) throw std::logic_error("hensel: inconsistent lift");
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
        }
        FPoly ep = F.from(e);
        FPoly q, dg;
        F.divmod(F.mul(t, ep), g, q, dg);
        FPoly dh = F.add(F.mul(s, ep), F.mul(q, h));
        ZPoly zg = to_z(dg), zh = to_z(dh);
        G.resize(std::max(G.size(), zg.size()));
        H.resize(std::max(H.size(), zh.size()));
        for (std::size_t i = 0; i < zg.size(); ++i) G[i] += zg[i] * pj;
        for (std::size_t i = 0; i < zh.size(); ++i) H[i] += zh[i] * pj;
        pj *= static_cast<unsigned long>(F.p);
        mod_pos(G, pj);
        mod_pos(H, pj);
    }
}

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f0) {
    ZPoly f = primitive_part(f0);
    if (degree(f) <= 1) return {f};
    std::vector<ZPoly> out;
    if (f[0] == 0) {
        out.push_back({0, 1});
        f.erase(f.begin());
        if (degree(f) <= 0) return out;
        if (degree(f) == 1) { out.push_back(f); return out; }
    }
    int n = degree(f);

    // pick the prime giving the fewest modular factors among a few candidates
    u64 best_p = 0;
    std::size_t best_count = SIZE_MAX;
    std::vector<std::pair<FPoly, int>> best_ddf;
    int tried = 0;
    for (u64 p = 3; tried < 6 && p < 100000; p += 2) {
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
        Fp F{p};
        FPoly fp = F.monic(F.from(f));
        if (static_cast<int>(fp.size()) - 1 != n) continue;
        if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
        ++tried;
        auto dd = ddf(F, fp);
        std::size_t cnt = 0;
        for (auto& [g, d] : dd) cnt += (g.size() - 1) / d;
        if (cnt < best_count) {
            best_count = cnt;
            best_p = p;
            best_ddf = dd;
        }
        if (cnt == 1) break;
    }
    if (best_p == 0) throw std::runtime_error("factor: no suitable prime");
    if (best_count == 1) {
        out.push_back(f);
        return out;
    }
    Fp F{best_p};
    std::mt19937_64 rng(0x5eedULL + best_p);
    std::vector<FPoly> mods;
    for (auto& [g, d] : best_ddf) edf(F, g, d, rng, mods);

    // coefficient bound for lc * (any factor)
    mpz_class norm2 = 0;
    for (auto& c : f) norm2 += c * c;
    mpz_class nrm;
    mpz_sqrt(nrm.get_mpz_t(), norm2.get_mpz_t());
    nrm += 1;
    mpz_class bound = abs(f.back()) * nrm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
    int k = 1;
    mpz_class P = static_cast<unsigned long>(best_p);
    while (P <= bound) {
        P *= static_cast<unsigned long>(best_p);
        ++k;
    }

    // lift one factor at a time against the remaining cofactor
    std::vector<ZPoly> lifted;
    ZPoly cur = f;
    mod_pos(cur, P);
    for (std::size_t i = 0; i + 1 < mods.size(); ++i) {
        FPoly g = mods[i];
        FPoly h{F.from(cur).back()};
        for (std::size_t j = i + 1; j < mods.size(); ++j) h = F.mul(h, mods[j]);
        ZPoly G, H;
        hensel_pair(cur, g, h, F, k, G, H);
        lifted.push_back(G);
        cur = H;
    }
    {
        mpz_class il;
        mpz_invert(il.get_mpz_t(), cur.back().get_mpz_t(), P.get_mpz_t());
        for (auto& c : cur) c *= il;
        mod_pos(cur, P);
        lifted.push_back(cur);
    }

    // recombination
    std::vector<int> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = static_cast<int>(i);
    ZPoly F_rest = f;
    int s = 1;
    while (2 * s <= static_cast<int>(remaining.size())) {
        bool found = false;
        std::vector<int> comb(s);
        for (int i = 0; i < s; ++i) comb[i] = i;
        do {
            ZPoly g{F_rest.back()};
            for (int c : comb) {
                g = poly_mul(g, lifted[remaining[c]]);
                mod_sym(g, P);
            }
            g = primitive_part(g);
            ZPoly q;
            if (degree(g) > 0 && poly_divides(F_rest, g, &q)) {
                out.push_back(g);
                F_rest = q;
                std::vector<int> nr;
                for (int i = 0; i < static_cast<int>(remaining.size()); ++i)
                    if (std::find(comb.begin(), comb.end(), i) == comb.end()) nr.push_back(remaining[i]);
                remaining = std::move(nr);
                found = true;
                break;
            }
        } while (next_combination(comb, static_cast<int>(remaining.size())));
        if (!found) ++s;
    }
    if (degree(F_rest) > 0) out.push_back(primitive_part(F_rest));
    return out;
}

// ---------------------------------------------------------------------------
// Sturm

SturmChain::SturmChain(const ZPoly& f) {
    chain_.push_back(drop_content(f));
    if (degree(f) <= 0) return;
    chain_.push_back(drop_content(derivative(f)));
    while (degree(chain_.back()) > 0) {
        ZPoly r = prem_positive(chain_[chain_.size() - 2], chain_.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain_.push_back(drop_content(r));
    }
}

int SturmChain::variations(const mpq_class& x) const {
    int v = 0, last = 0;
    for (auto& p : chain_) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmChain::count(const mpq_class& a, const mpq_class& b) const {
    return variations(a) - variations(b);
}

mpq_class SturmChain::root_bound() const {
    const ZPoly& f = chain_.front();
    mpq_class m = 0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        mpq_class r(abs(f[i]), abs(f.back()));
        r.canonicalize();
        if (r > m) m = r;
    }
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
    return mpq_class(c + 2);
}

std::vector<RootInterval> isolate_real_roots(const ZPoly& f) {
    std::vector<RootInterval> out;
    if (degree(f) <= 0) return out;
    SturmChain s(f);
    mpq_class b = s.root_bound();
    std::vector<RootInterval> stack{{-b, b}};
    while (!stack.empty()) {
        RootInterval iv = stack.back();
        stack.pop_back();
        int c = s.count(iv.lo, iv.hi);
        if (c == 0) continue;
        if (c == 1) {
            out.push_back(iv);
            continue;
        }
        mpq_class mid = (iv.lo + iv.hi) / 2;
        stack.push_back({iv.lo, mid});
        stack.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.lo < y.lo; });
    return out;
}

RootInterval refine(const SturmChain& s, RootInterval iv, const mpq_class& width) {
    while (iv.hi - iv.lo > width) {
        mpq_class mid = (iv.lo + iv.hi) / 2;
        if (s.count(iv.lo, mid) == 1) iv.hi = mid;
        else iv.lo = mid;
    }
    return iv;
}

// ---------------------------------------------------------------------------
// reductions mod a single odd prime

bool squarefree_mod(const ZPoly& f, u64 p) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) return false;
    Fp F{p};
    FPoly fp = F.monic(F.from(f));
    return F.gcd(fp, F.derivative(fp)).size() == 1;
}

ZPoly x_power_mod(const ZPoly& f, const mpz_class& e, u64 p) {
    Fp F{p};
    return to_z(F.powmod(FPoly{0, 1}, e, F.monic(F.from(f))));
}

std::vector<u64> roots_mod(const ZPoly& f, u64 p) {
    Fp F{p};
    FPoly fp = F.monic(F.from(f));
    FPoly linear = F.gcd(fp, F.sub(F.powmod(FPoly{0, 1}, mpz_class(static_cast<unsigned long>(p)), fp), FPoly{0, 1}));
    if (linear.size() < 2) return {};
    std::vector<FPoly> parts;
    std::mt19937_64 rng(0x600dULL ^ p);
    edf(F, linear, 1, rng, parts);
    std::vector<u64> out;
    for (auto& g : parts) out.push_back((p - g[0]) % p);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fusionforge
