#include "fusionforge/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusionforge {

mpz_class f_bound(u64 n) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("f_bound needs a positive even argument");
    u64 half = n / 2;
    int a0 = 0;
    for (u64 t = half; t % 2 == 0; t /= 2) ++a0;
    mpz_class out = 1;
    out <<= a0 + 3;
    for (u64 d : divisors(n)) {
        u64 p = d + 1;
        if (p == 2 || !is_prime(p)) continue;
        u64 q = p;
        if (n % p == 0)
            for (u64 t = half; t % p == 0; t /= p) q *= p;
        out *= q;
    }
    return out;
}

u64 f_bound_oracle(u64 n, u64 multiplier) {
    mpz_class lim = multiplier * f_bound(n);
    if (!lim.fits_ulong_p() || lim > 1'000'000'000) throw std::invalid_argument("oracle search range too large");
    u64 limit = lim.get_ui();
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (spf[i]) continue;
        for (u64 j = i; j <= limit; j += i)
            if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
    }
    // lambda(m) = n has no solution for some n (e.g. 14), so the search is
    // for the largest m whose unit group exponent divides n
    u64 best = 0;
    for (u64 m = 2; m <= limit; ++m) {
        u64 lam = 1, rest = m;
        while (rest > 1) {
            u64 p = spf[rest], pk = 1;
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                pk *= p;
                ++e;
            }
            u64 l = p == 2 ? (e <= 2 ? pk / 2 : pk / 4) : pk / p * (p - 1);
            lam = lcm_u(lam, l);
            if (n % lam != 0) break;
        }
        if (n % lam == 0) best = m;
    }
    return best;
}

mpz_class charge_order_bound(u64 n) { return f_bound(2 * n) / 3; }

mpz_class twist_order_bound(u64 n) { return f_bound(2 * n); }

ChargeBound charge_bound_from_fields(const SubfieldHandle& k0, const SubfieldHandle& k1) {
    ChargeBound b;
    b.exponent = field_exponent(k0);
    b.doubled = !field_eq(k0, k1);
    b.bound = charge_order_bound(b.exponent) * (b.doubled ? 2 : 1);
    return b;
}

bool prime_power_sixteen_check(const FactoredInteger& n) {
    if (!n.is_prime_power()) return false;
    auto [p, b] = n.parts.front();
    u64 pa = 1;
    for (int a = 1; a <= b; ++a) {
        pa *= p;
        if (pa > (u64(1) << 62)) throw std::overflow_error("prime power too large for the primality test");
        if (is_prime(2 * pa + 1)) return false;
    }
    return true;
}

bool prime_power_sixteen_check(u64 n) {
    if (n <= 1) return false;
    return prime_power_sixteen_check(factorize(n));
}

std::vector<u64> unrealized_degrees(u64 bound) {
    // phi(x) >= sqrt(x) / 2, so phi(x) <= 2 * bound forces x <= 16 bound^2
    u64 limit = 16 * bound * bound + 16;
    std::vector<u64> phi(limit + 1);
    for (u64 i = 0; i <= limit; ++i) phi[i] = i;
    for (u64 p = 2; p <= limit; ++p) {
        if (phi[p] != p) continue;
        for (u64 j = p; j <= limit; j += p) phi[j] -= phi[j] / p;
    }
    std::vector<char> hit(2 * bound + 1, 0);
    for (u64 x = 1; x <= limit; ++x)
        if (phi[x] <= 2 * bound) hit[phi[x]] = 1;
    std::vector<u64> out;
    for (u64 m = 1; m <= bound; ++m)
        if (!hit[2 * m]) out.push_back(m);
    return out;
}

std::vector<int> eight_root_levels(const AlgebraData& g) {
    u64 target = static_cast<u64>(g.h_dual) * static_cast<u64>(g.dim_g);
    std::vector<int> out;
    for (u64 d : divisors(target))
        if (d > static_cast<u64>(g.h_dual)) out.push_back(static_cast<int>(d - g.h_dual));
    std::sort(out.begin(), out.end());
    return out;
}

CategoryChargeReport charge_report(const std::vector<CategoryHandle>& factors) {
    if (factors.empty()) throw std::invalid_argument("charge_report needs at least one factor");
    CategoryChargeReport r;
    CycElem total(1);
    r.K1 = rational_field();
    for (const auto& c : factors) {
        total *= fpdim_total_category(c);
        r.K1 = field_join(r.K1, K1_field(c));
    }
    r.K0 = field_generated_by(total);
    r.charge = central_charge_formula(factors);
    r.bound = charge_bound_from_fields(r.K0, r.K1);
    r.divides = mpz_divisible_ui_p(r.bound.bound.get_mpz_t(), r.charge.order()) != 0;
    r.attains = r.bound.bound == r.charge.order();
    r.sixteen_applies = prime_power_sixteen_check(field_exponent(r.K1));
    return r;
}

}  // namespace fusionforge
