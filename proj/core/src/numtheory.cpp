#include "fusionforge/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fusionforge {

u64 FactoredInteger::value() const {
    u64 v = 1;
    for (auto [p, e] : parts)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

u64 gcd_u(u64 a, u64 b) { return std::gcd(a, b); }
u64 lcm_u(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

FactoredInteger factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    FactoredInteger f;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.parts.push_back({p, e});
    }
    if (n > 1) f.parts.push_back({n, 1});
    return f;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (auto [p, e] : factorize(n).parts) out.push_back(p);
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> d{1};
    for (auto [p, e] : factorize(n).parts) {
        std::size_t sz = d.size();
        u64 pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) d.push_back(d[j] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

u64 euler_phi(u64 n) {
    u64 r = n;
    for (auto [p, e] : factorize(n).parts) r = r / p * (p - 1);
    return r;
}

u64 carmichael_lambda(u64 n) {
    u64 r = 1;
    for (auto [p, e] : factorize(n).parts) {
        u64 pe1 = 1;
        for (int i = 1; i < e; ++i) pe1 *= p;
        u64 l = pe1 * (p - 1);
        if (p == 2 && e >= 3) l /= 2;
        r = lcm_u(r, l);
    }
    return r;
}

int mobius(u64 n) {
    int s = 1;
    for (auto [p, e] : factorize(n).parts) {
        if (e > 1) return 0;
        s = -s;
    }
    return s;
}

std::vector<u64> units_mod(u64 n) {
    if (n <= 2) return {1};
    std::vector<u64> u;
    for (u64 l = 1; l < n; ++l)
        if (std::gcd(l, n) == 1) u.push_back(l);
    return u;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr) {
        __int128 q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw std::domain_error("invmod: not invertible");
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

u64 mult_order(u64 a, u64 n) {
    if (n == 1) return 1;
    u64 ord = carmichael_lambda(n);
    for (auto [p, e] : factorize(ord).parts) {
        while (ord % p == 0 && powmod(a, ord / p, n) == 1) ord /= p;
    }
    return ord;
}

u64 primitive_root(u64 p) {
    if (p == 2) return 1;
    auto ps = prime_divisors(p - 1);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : ps)
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
}

std::vector<u64> split_primes(u64 m, int count, int bits) {
    std::vector<u64> out;
    u64 top = (u64{1} << bits) - 1;
    u64 t = (top - 1) / m;
    while (static_cast<int>(out.size()) < count && t > 0) {
        u64 p = 1 + t * m;
        if (is_prime(p)) out.push_back(p);
        --t;
    }
    return out;
}

u64 next_prime_in_class(u64 start, u64 r, u64 m) {
    u64 q = start - start % m + r % m;
    if (q < start) q += m;
    while (!is_prime(q)) q += m;
    return q;
}

}  // namespace fusionforge
