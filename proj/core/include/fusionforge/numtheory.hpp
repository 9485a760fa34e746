#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fusionforge {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Prime-exponent pairs, primes ascending.
struct FactoredInteger {
    std::vector<std::pair<u64, int>> parts;

    u64 value() const;
    bool is_prime_power() const { return parts.size() == 1; }
};

u64 gcd_u(u64 a, u64 b);
u64 lcm_u(u64 a, u64 b);
i64 mod_floor(i64 a, i64 m);

FactoredInteger factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);
u64 carmichael_lambda(u64 n);
int mobius(u64 n);

// Residues 1 <= l < n coprime to n, ascending; {1} when n <= 2.
std::vector<u64> units_mod(u64 n);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
u64 invmod(u64 a, u64 m);  // throws if not invertible

// Deterministic for every 64-bit input.
bool is_prime(u64 n);

// Multiplicative order of a modulo n (gcd(a,n)=1).
u64 mult_order(u64 a, u64 n);

u64 primitive_root(u64 p);

// Primes p = 1 + t*m just below 2^bits, descending, count of them.
std::vector<u64> split_primes(u64 m, int count, int bits = 62);

// Smallest prime q >= start with q % m == r.
u64 next_prime_in_class(u64 start, u64 r, u64 m);

}  // namespace fusionforge
