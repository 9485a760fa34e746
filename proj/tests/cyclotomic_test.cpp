#include <doctest.h>

#include <random>

#include "fusionforge/cyclotomic.hpp"
#include "fusionforge/fusion_io.hpp"

using namespace fusionforge;

namespace {

CycElem z(u64 n, i64 k = 1) { return root_of_unity(n, k); }

CycElem random_elem(std::mt19937_64& rng, u64 n) {
    std::uniform_int_distribution<int> coef(-4, 4), den(1, 3);
    std::vector<std::pair<i64, Rational>> terms;
    for (u64 e = 0; e < n; ++e)
        if (rng() % 3 == 0) terms.emplace_back(static_cast<i64>(e), Rational(coef(rng), den(rng)));
    return CycElem::from_terms(n, terms);
}

}  // namespace

TEST_CASE("roots of unity") {
    CHECK(z(1, 0) == CycElem(1));
    CHECK(z(4) * z(4) == CycElem(-1));
    CHECK(z(12, 2) == z(6));
    CHECK(z(12, 2).conductor() == 3);  // zeta_6 = -zeta_3^2 lives in Q(zeta_3)
    for (u64 n : {5, 9, 12, 16}) CHECK(z(n).pow(static_cast<i64>(n)) == CycElem(1));
    CHECK(z(12, 3).pow(4) == CycElem(1));
    CHECK(z(12, 3).pow(2) != CycElem(1));
}

TEST_CASE("field operations") {
    CHECK(add(z(3), z(3, 2)) == CycElem(-1));
    CHECK(mul(z(8), z(8, 7)) == CycElem(1));
    CycElem a = CycElem(1) + z(5);
    CHECK(a * inv(a) == CycElem(1));
    CHECK_THROWS_AS(inv(CycElem(0)), std::domain_error);
    CHECK(neg(z(7)) + z(7) == CycElem(0));
}

TEST_CASE("field axioms at mixed conductors") {
    std::mt19937_64 rng(7);
    const u64 conductors[] = {3, 4, 5, 8, 12, 15};
    for (int trial = 0; trial < 40; ++trial) {
        CycElem a = random_elem(rng, conductors[rng() % 6]);
        CycElem b = random_elem(rng, conductors[rng() % 6]);
        CycElem c = random_elem(rng, conductors[rng() % 6]);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == CycElem(1));
    }
}

TEST_CASE("galois action") {
    CHECK(galois_apply(GaloisElement(9, -1), z(9)) == z(9).conj());
    CHECK(galois_apply(GaloisElement(7, 3), CycElem(Rational(2, 5))) == CycElem(Rational(2, 5)));
    GaloisElement two(5, 2);
    CHECK(galois_apply(two, galois_apply(two, z(5))) == z(5, 4));
    CHECK_THROWS(GaloisElement(6, 3));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        CycElem a = random_elem(rng, 20), b = random_elem(rng, 20);
        for (u64 l : units_mod(20)) {
            GaloisElement s(20, static_cast<i64>(l));
            CHECK(galois_apply(s, a * b) == galois_apply(s, a) * galois_apply(s, b));
            CHECK(galois_apply(s, a + b) == galois_apply(s, a) + galois_apply(s, b));
        }
        CHECK(galois_apply(GaloisElement(20, 1), a) == a);
    }
}

TEST_CASE("stabilizers and generated fields") {
    CHECK(stabilizer_of(CycElem(3)) == std::vector<u64>{1});
    CHECK(stabilizer_of(z(7)) == std::vector<u64>{1});
    CHECK(stabilizer_of(z(8) + z(8, 7)) == std::vector<u64>{1, 7});
    CHECK(field_generated_by(CycElem(1)) == rational_field());
    SubfieldHandle q5 = field_generated_by(z(5) + z(5, 4));
    CHECK(field_degree(q5) == 2);
    CHECK(q5 == real_cyclotomic(5));
    CycElem x = cos_pi_frac(2, 13) - cos_pi_frac(3, 13);
    CHECK(field_degree(field_generated_by(x)) == 3);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        CycElem a = random_elem(rng, 24);
        CHECK(euler_phi(std::max<u64>(a.conductor(), 1)) % field_degree(field_generated_by(a)) == 0);
    }
}

TEST_CASE("field lattice") {
    CHECK(field_eq(real_cyclotomic(5), real_cyclotomic(10)));
    SubfieldHandle r2 = field_generated_by(sqrt_rational(2)), r5 = field_generated_by(sqrt_rational(5));
    CHECK(subfield_leq(r2, real_cyclotomic(24)));
    SubfieldHandle j = field_join(r2, r5);
    CHECK(field_degree(j) == 4);
    CHECK(j.conductor == 40);
    CHECK(field_meet(r2, r5) == rational_field());
    CHECK(contains(j, sqrt_rational(10)));
    CHECK_FALSE(contains(r2, sqrt_rational(5)));
    CHECK(describe(j) == "Q(sqrt(2), sqrt(5))");
}

TEST_CASE("real cyclotomic fields") {
    CHECK(real_cyclotomic(4) == rational_field());
    CHECK(real_cyclotomic(8) == field_generated_by(sqrt_rational(2)));
    CHECK(real_cyclotomic(12) == field_generated_by(sqrt_rational(3)));
    for (u64 n = 3; n <= 40; ++n) CHECK(field_degree(real_cyclotomic(n)) == euler_phi(n) / 2);
}

TEST_CASE("cosines and quantum integers") {
    CHECK(cos_pi_frac(0, 1) == CycElem(1));
    CHECK(cos_pi_frac(1, 3) == CycElem(Rational(1, 2)));
    CycElem c = cos_pi_frac(1, 4);
    CHECK(c * c == CycElem(Rational(1, 2)));
    CHECK(c.conj() == c);

    for (u64 m = 2; m <= 20; ++m) {
        CHECK(quantum_integer(1, m) == CycElem(1));
        for (u64 n = 1; n < m; ++n) CHECK(quantum_integer(static_cast<i64>(n), m) == quantum_integer(static_cast<i64>(m - n), m));
    }
    CycElem q = quantum_integer(2, 4);
    CHECK(q * q == CycElem(2));
    CHECK_THROWS(quantum_integer(5, 5));
}

TEST_CASE("quantum integer fields agree with the closed form") {
    CHECK(quantum_integer_field(1, 7) == rational_field());
    CHECK(quantum_integer_field(2, 9) == real_cyclotomic(18));
    CHECK(quantum_integer_field(3, 9) == real_cyclotomic(9));
    for (u64 m = 2; m <= 40; ++m)
        for (u64 n = 1; n < m; ++n) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(quantum_integer_field(static_cast<i64>(n), m) == field_generated_by(quantum_integer(static_cast<i64>(n), m)));
        }
}

TEST_CASE("conjugates of real elements stay real") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        CycElem a = random_elem(rng, 21);
        CycElem r = a + a.conj();
        u64 n = std::max<u64>(r.conductor(), 1);
        for (u64 l : units_mod(n)) {
            CycElem s = galois_apply(GaloisElement(n, static_cast<i64>(l)), r);
            CHECK(s.conj() == s);
        }
    }
}

TEST_CASE("floating evaluation") {
    CHECK(to_float(z(1), 64).re.to_double() == 1.0);
    auto q = to_float(quantum_integer(2, 4), 200);
    CHECK(q.re.to_string(30).substr(0, 12) == "1.4142135623");
    CHECK(to_float(cos_pi_frac(2, 5), 128).re.to_double() == doctest::Approx(0.30901699437494742).epsilon(1e-15));
    CHECK(to_float(z(4), 64).im.to_double() == 1.0);
}

TEST_CASE("serialization round trips") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        CycElem a = random_elem(rng, 15);
        CHECK(cyc_from_json(to_json(a)) == a);
    }
    SubfieldHandle f = field_join(real_cyclotomic(7), field_generated_by(sqrt_rational(3)));
    CHECK(field_from_json(to_json(f)) == f);
    CHECK(to_json(CycElem(Rational(-3, 4)))["coefficients"][0] == "-3/4");
}
