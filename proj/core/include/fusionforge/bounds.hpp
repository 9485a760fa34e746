#pragma once

#include <vector>

#include <gmpxx.h>

#include "fusionforge/cyclotomic.hpp"
#include "fusionforge/lie_algebra.hpp"
#include "fusionforge/numtheory.hpp"
#include "fusionforge/quantum_group.hpp"

namespace fusionforge {

// largest m with carmichael_lambda(m) = n, by the closed form; n even
mpz_class f_bound(u64 n);
// the same by exhaustive search over m <= multiplier * f_bound(n); test use
u64 f_bound_oracle(u64 n, u64 multiplier = 4);

// order bound for the central charge when Gal(L/Q) has exponent n
mpz_class charge_order_bound(u64 n);
// order bound for a twist when Gal(L_X/Q) has exponent n
mpz_class twist_order_bound(u64 n);

// pseudounitary form: n is the exponent of Gal(K0/Q); the bound doubles when K1 != K0
struct ChargeBound {
    u64 exponent = 1;
    bool doubled = false;
    mpz_class bound = 8;
};
ChargeBound charge_bound_from_fields(const SubfieldHandle& k0, const SubfieldHandle& k1);

// n = p^b with 2 p^a + 1 composite for every 1 <= a <= b
bool prime_power_sixteen_check(u64 n);
bool prime_power_sixteen_check(const FactoredInteger& n);

// m <= bound such that 2m is not a value of euler_phi
std::vector<u64> unrealized_degrees(u64 bound);

// levels k with kappa | h_dual * dim g, i.e. xi^8 = 1
std::vector<int> eight_root_levels(const AlgebraData& g);

struct CategoryChargeReport {
    SubfieldHandle K0;
    SubfieldHandle K1;
    RootOfUnity charge;
    ChargeBound bound;
    bool divides = false;     // charge order | bound
    bool attains = false;     // charge order == bound
    bool sixteen_applies = false;
};

// for a Deligne product of the given factors
CategoryChargeReport charge_report(const std::vector<CategoryHandle>& factors);

}  // namespace fusionforge
