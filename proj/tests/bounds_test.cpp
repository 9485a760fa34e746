#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fusionforge/bounds.hpp"
#include "fusionforge/figures.hpp"

using namespace fusionforge;

namespace {

// exponent of (Z/m)^x by brute force
u64 group_exponent(u64 m) {
    u64 e = 1;
    for (u64 a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1) e = std::lcm(e, mult_order(a, m));
    return e;
}

}  // namespace

TEST_CASE("Euler phi and Carmichael lambda") {
    CHECK(carmichael_lambda(1) == 1);
    CHECK(carmichael_lambda(2) == 1);
    CHECK(carmichael_lambda(8) == 2);
    CHECK(carmichael_lambda(24) == 2);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(36) == 12);
    for (u64 m = 1; m <= 100000; ++m) REQUIRE(euler_phi(m) % carmichael_lambda(m) == 0);
    for (u64 m = 3; m <= 2000; ++m) REQUIRE(carmichael_lambda(m) == group_exponent(m));
}

TEST_CASE("the f bound") {
    CHECK(f_bound(2) == 24);
    CHECK(f_bound(4) == 240);
    CHECK(f_bound(12) == 65520);
    CHECK(f_bound_oracle(2) == 24);
    CHECK(f_bound_oracle(4) == 240);
    for (u64 n = 1; n <= 12; ++n) {
        CAPTURE(n);
        mpz_class f = f_bound(2 * n);
        CHECK(f == f_bound_oracle(2 * n));
        u64 lam = carmichael_lambda(f.get_ui());
        // no m has lambda(m) = 14, so f(14) only reaches a proper divisor
        if (n == 7) CHECK(lam == 2);
        else CHECK(lam == 2 * n);
    }
    mpz_class wide = f_bound(2 * 2520);
    CHECK(wide > mpz_class("18446744073709551615"));
    CHECK(wide % f_bound(2 * 1260) == 0);
}

TEST_CASE("order bounds") {
    CHECK(charge_order_bound(1) == 8);
    CHECK(charge_order_bound(7) == 8);
    CHECK(twist_order_bound(1) == 24);
    CHECK(twist_order_bound(2) == 240);
    CHECK(twist_order_bound(3) == 504);
    ChargeBound b = charge_bound_from_fields(rational_field(), real_cyclotomic(8));
    CHECK(b.exponent == 1);
    CHECK(b.doubled);
    CHECK(b.bound == 16);
    ChargeBound c = charge_bound_from_fields(real_cyclotomic(7), real_cyclotomic(7));
    CHECK(c.exponent == 3);
    CHECK_FALSE(c.doubled);
    CHECK(c.bound == 168);
}

TEST_CASE("order bound table") {
    auto rows = figure_K();
    const u64 closed[] = {8, 80, 168, 160, 88, 21840, 8, 5440, 9576, 4400};
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].N == i + 1);
        CHECK(rows[i].closed_form == closed[i]);
        CHECK(rows[i].oracle == closed[i]);
    }
    // C(A1,7): K0 = Q_9 has exponent 3 and the charge has order 24, which no bound of 56 allows
    CategoryChargeReport a17 = charge_report({make_category('A', 1, 7)});
    CHECK(a17.bound.exponent == 3);
    CHECK(a17.charge.order() == 24);
    CHECK(a17.divides);
}

TEST_CASE("central charge witnesses") {
    CategoryChargeReport a = charge_report({make_category('A', 1, 2)});
    CHECK(a.charge.fraction == mpq_class(3, 16));
    CHECK(a.attains);
    CategoryChargeReport b = charge_report({make_category('A', 1, 6), make_category('A', 2, 7)});
    CHECK(b.charge.fraction == mpq_class(157, 160));
    CHECK(b.bound.exponent == 2);
    CHECK(b.attains);
    CategoryChargeReport c = charge_report({make_category('A', 1, 2), make_category('A', 1, 5)});
    CHECK(c.charge.fraction == mpq_class(51, 112));
    CHECK(c.bound.exponent == 3);
    CHECK(c.bound.doubled);
    CHECK(c.divides);
    CHECK(c.bound.bound == 336);
}

TEST_CASE("sixteenth-root criterion") {
    CHECK(prime_power_sixteen_check(7));
    CHECK_FALSE(prime_power_sixteen_check(1));
    CHECK_FALSE(prime_power_sixteen_check(3));
    CHECK_FALSE(prime_power_sixteen_check(12));
    CHECK(prime_power_sixteen_check(49) == (!is_prime(15) && !is_prime(99)));
}

TEST_CASE("unrealized degrees") {
    auto u = unrealized_degrees(76);
    const std::vector<u64> prefix = {7, 13, 17, 19, 25, 31, 34, 37, 38, 43, 45, 47, 49, 57, 59, 61, 62};
    REQUIRE(u.size() >= prefix.size() + 3);
    CHECK(std::vector<u64>(u.begin(), u.begin() + static_cast<long>(prefix.size())) == prefix);
    CHECK(std::vector<u64>(u.end() - 3, u.end()) == std::vector<u64>{71, 73, 76});
    auto small = unrealized_degrees(20);
    CHECK(small == std::vector<u64>{7, 13, 17, 19});
    for (u64 m : unrealized_degrees(300))
        for (u64 x = 1; x <= 2000; ++x) REQUIRE(euler_phi(x) != 2 * m);
}

TEST_CASE("eighth-root levels") {
    CHECK(eight_root_levels(build_algebra('A', 1)) == std::vector<int>{1, 4});
    // kappa = k + 3 must divide 24; at k = 7 the charge is exp(2 pi i 7/10)
    CHECK(eight_root_levels(build_algebra('A', 2)) == std::vector<int>{1, 3, 5, 9, 21});
    CHECK(central_charge_formula(make_category('A', 2, 7)).order() == 10);
    for (char t : std::string("ABCG")) {
        int n = t == 'B' ? 3 : (t == 'A' ? 1 : 2);
        AlgebraData g = build_algebra(t, n);
        auto levels = eight_root_levels(g);
        for (int k = 1; k <= 200; ++k) {
            bool eighth = 8 % central_charge_formula(make_category(t, n, k)).order() == 0;
            CHECK(eighth == std::binary_search(levels.begin(), levels.end(), k));
        }
    }
}
