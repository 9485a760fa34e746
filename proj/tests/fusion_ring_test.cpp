#include <doctest.h>

#include <algorithm>
#include <set>

#include "fusionforge/fusion_ring.hpp"
#include "support/corpus.hpp"

using namespace fusionforge;
using namespace fusionforge::testing;

namespace {

ZPoly poly(std::initializer_list<long> coefs) {
    ZPoly f;
    for (long c : coefs) f.emplace_back(c);
    return f;
}

bool has_axiom(const std::vector<Violation>& v, const std::string& prefix) {
    for (const auto& x : v)
        if (x.axiom.rfind(prefix, 0) == 0) return true;
    return false;
}

EmbeddedRing embedded(const FusionRing& r, u64 n = 2000, ConductorMode mode = ConductorMode::search_bound) {
    EmbeddedRing e = attach_cyclotomic_embedding(r, n, mode);
    REQUIRE(e.embedded);
    return e;
}

}  // namespace

TEST_CASE("validation") {
    CHECK(validate(group_ring_cyclic({2})).empty());
    CHECK(validate(fibonacci_ring()).empty());
    CHECK(validate(FusionRing()).empty());

    auto c = fibonacci_ring().constants();
    c[(1 * 2 + 1) * 2 + 0] = 2;
    auto v = validate(FusionRing({"1", "X"}, {0, 1}, c));
    REQUIRE_FALSE(v.empty());
    CHECK(has_axiom(v, "duality"));
    CHECK(std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.message() == "duality: c_ij^0 = 1 iff b_i = b_j* at (1,1)"; }));

    // X^2 = X drops the unit summand
    auto d = fibonacci_ring().constants();
    d[(1 * 2 + 1) * 2 + 0] = 0;
    CHECK(has_axiom(validate(FusionRing({"1", "X"}, {0, 1}, d)), "duality"));

    // non-associative: rank 3 with X^2 = 1 + Y, Y^2 = 1 + X, XY = X + Y, X* = X
    std::vector<int> e(27, 0);
    auto set = [&](int i, int j, int k, int m = 1) { e[(i * 3 + j) * 3 + k] = m; };
    for (int j = 0; j < 3; ++j) set(0, j, j), set(j, 0, j);
    set(1, 1, 0), set(1, 1, 2), set(2, 2, 0), set(2, 2, 1);
    set(1, 2, 1), set(1, 2, 2), set(2, 1, 1), set(2, 1, 2);
    CHECK(has_axiom(validate(FusionRing({"1", "X", "Y"}, {0, 1, 2}, e)), "associativity"));

    CHECK(validate(ring_S_times_T()).empty());
    CHECK(ring_S_times_T().rank() == 6);
}

TEST_CASE("fusion matrices") {
    ZMatrix id = fusion_matrix(ising_ring(), 0);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) CHECK(id[j][k] == (j == k ? 1 : 0));
    ZMatrix x = fusion_matrix(fibonacci_ring(), 1);
    CHECK(x == ZMatrix{{0, 1}, {1, 1}});
    FusionRing g = group_ring_cyclic({2, 4});
    for (int i = 0; i < g.rank(); ++i) {
        ZMatrix m = fusion_matrix(g, i);
        for (const auto& row : m) {
            int ones = 0;
            for (const auto& v : row) {
                CHECK((v == 0 || v == 1));
                ones += v == 1;
            }
            CHECK(ones == 1);
        }
    }
    CHECK(product_ring(ring_S(), FusionRing()).constants() == ring_S().constants());
}

TEST_CASE("Frobenius-Perron dimensions") {
    FusionRing fib = fibonacci_ring();
    AlgebraicReal phi = fpdim(fib, 1);
    CHECK(phi.minimal_polynomial == poly({-1, -1, 1}));
    CHECK(phi.approx() == doctest::Approx(1.6180339887498949));
    CHECK(fpdim(fib, 0).minimal_polynomial == poly({-1, 1}));

    AlgebraicReal s = fpdim(ising_ring(), 1);
    CHECK(s.minimal_polynomial == poly({-2, 0, 1}));
    CHECK(fpdim(ising_ring(), 2).approx() == 1.0);

    AlgebraicReal total = fpdim_total(fib);
    CHECK(total.minimal_polynomial == poly({5, -5, 1}));
    CHECK(total.approx() == doctest::Approx((5 + 2.2360679774997896) / 2));
    CHECK(fpdim_total(group_ring_cyclic({6})).minimal_polynomial == poly({-6, 1}));
    CHECK(fpdim_of_element(fib, {{1, 0}}).approx() == 1.0);
    CHECK(fpdim_of_element(fib, {{1, 2}}).approx() == doctest::Approx(1 + 2 * 1.6180339887498949));

    FusionRing st = ring_S_times_T();
    auto d = fpdims(st);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(d[2 * i + j].approx() == doctest::Approx(fpdim(ring_S(), i).approx() * fpdim(ring_T(), j).approx()));
}

TEST_CASE("cyclotomic embeddings") {
    EmbeddedRing fib = embedded(fibonacci_ring(), 5, ConductorMode::exact);
    CHECK(fib.dim(1) == (CycElem(1) + sqrt_rational(5)) * CycElem(Rational(1, 2)));

    EmbeddedRing g = embedded(group_ring_cyclic({3}), 1, ConductorMode::exact);
    for (int i = 0; i < 3; ++i) CHECK(g.dim(i) == CycElem(1));

    EmbeddedRing st = embedded(ring_S_times_T(), 40, ConductorMode::exact);
    SubfieldHandle q25 = field_join(field_generated_by(sqrt_rational(2)), field_generated_by(sqrt_rational(5)));
    for (int i = 0; i < 6; ++i) CHECK(contains(q25, st.dim(i)));
    CHECK(field_generated_by(st.dim(3)) == q25);

    EmbeddedRing searched = embedded(ring_S_times_T());
    CHECK(searched.conductor == 40);

    // no Q(zeta_N) with N <= 3 holds the golden ratio
    EmbeddedRing failed = attach_cyclotomic_embedding(fibonacci_ring(), 3, ConductorMode::exact);
    CHECK_FALSE(failed.embedded);
    CHECK_FALSE(failed.note.empty());
}

TEST_CASE("pointed and adjoint subrings") {
    FusionRing g = group_ring_cyclic({2, 2});
    CHECK(pointed_subring(g) == BasisSet{0, 1, 2, 3});
    CHECK(adjoint_subring(g) == BasisSet{0});
    CHECK(pointed_subring(fibonacci_ring()) == BasisSet{0});
    CHECK(adjoint_subring(fibonacci_ring()) == BasisSet{0, 1});
    CHECK(pointed_subring(ring_S()) == BasisSet{0, 2});
    CHECK(adjoint_subring(ring_S()) == BasisSet{0, 2});
    CHECK(pointed_subring(FusionRing()) == BasisSet{0});
}

TEST_CASE("generated subrings") {
    CHECK(subring_generated_by(ring_S(), {0}) == BasisSet{0});
    CHECK(subring_generated_by(fibonacci_ring(), {1}) == BasisSet{0, 1});
    CHECK(subring_generated_by(group_ring_cyclic({4}), {2}) == BasisSet{0, 2});
    CHECK(is_subring(ring_S(), {0, 2}));
    CHECK_FALSE(is_subring(ring_S(), {0, 1}));
    CHECK(is_multiplicatively_generated_by(group_ring_cyclic({5}), 1));
    CHECK(is_multiplicatively_generated_by(fibonacci_ring(), 1));
    CHECK_FALSE(is_multiplicatively_generated_by(ring_S(), 2));
    CHECK(is_multiplicatively_generated_by(ring_S(), 1));
    CHECK_FALSE(is_multiplicatively_generated_by(group_ring_cyclic({2, 2}), 1));
}

TEST_CASE("universal grading") {
    GradingPartition u = universal_grading(group_ring_cyclic({2, 6}));
    CHECK(u.group_order() == 12);
    CHECK(u.invariant_factors == std::vector<u64>{2, 6});
    CHECK(universal_grading(fibonacci_ring()).group_order() == 1);
    GradingPartition st = universal_grading(ring_S_times_T());
    CHECK(st.group_name() == "Z/2");
    CHECK(st.components[0] == std::vector<int>{0, 1, 4, 5});
    CHECK(universal_grading(ring_S()).group_name() == "Z/2");
}

TEST_CASE("dimensional grading and field subrings") {
    EmbeddedRing ising = embedded(ising_ring());
    DimensionalGrading di = dimensional_grading(ising);
    CHECK(di.K0 == rational_field());
    CHECK(di.K1 == field_generated_by(sqrt_rational(2)));
    CHECK(di.partition.group_name() == "Z/2");
    CHECK(di.partition.components[1] == std::vector<int>{1});

    EmbeddedRing st = embedded(ring_S_times_T());
    DimensionalGrading ds = dimensional_grading(st);
    SubfieldHandle q5 = field_generated_by(sqrt_rational(5));
    CHECK(ds.K0 == q5);
    CHECK(field_degree(ds.K1) == 4);
    CHECK(ds.partition.group_name() == "Z/2");
    // K0(d_i) merges the Q and Q(sqrt 5) dimensions into the trivial component
    CHECK(ds.partition.components[0] == std::vector<int>{0, 1, 4, 5});
    std::set<SubfieldHandle> lattice(ds.fields.begin(), ds.fields.end());
    CHECK(lattice.size() == 4);

    CHECK(subring_R_K(st, q5) == BasisSet{0, 1, 4, 5});
    CHECK(subring_R_K(st, rational_field()) == BasisSet{0, 4});
    CHECK(subring_R_K(embedded(fibonacci_ring()), rational_field()) == BasisSet{0});
    CHECK(subring_R_K(embedded(group_ring_cyclic({3})), rational_field()) == BasisSet{0, 1, 2});

    CHECK(check_main_lemma(ising, {1, 0, 0}, {1, 0, 0}));
    // 1 + eps against X X*, both aggregates of the adjoint subring
    CHECK(check_main_lemma(ising, {1, 0, 1}, {1, 0, 1}));
    CHECK(check_main_lemma(st, {0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}));
}

TEST_CASE("product rings") {
    FusionRing st = ring_S_times_T();
    CHECK(st.labels()[3] == "X.X");
    CHECK(st.duality() == std::vector<int>{0, 1, 2, 3, 4, 5});
    EmbeddedRing e = embedded(st);
    EmbeddedRing s = embedded(ring_S()), t = embedded(ring_T());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) CHECK(e.dim(2 * i + j) == s.dim(i) * t.dim(j));
}

TEST_CASE("property checks over the corpus") {
    for (const auto& [name, ring] : full_corpus()) {
        CAPTURE(name);
        REQUIRE(validate(ring).empty());
        EmbeddedRing e = embedded(ring);
        CHECK(check_fpdim_homomorphism(e) == "");
        CHECK(check_squares_in_K0(e) == "");
        CHECK(check_subring_dims_in_K0(e) == "");
        CHECK(check_main_lemma_exhaustive(e, ring.rank() <= 7 ? 2 : 1) == "");
        CHECK(check_dimensional_grading(e) == "");
        CHECK(check_universal_coarsening(e) == "");
        SubfieldHandle k1 = K1_of(e);
        for (u64 l : units_mod(std::max<u64>(k1.conductor, 1)))
            for (int i = 0; i < ring.rank(); ++i) {
                CycElem c = galois_apply(GaloisElement(std::max<u64>(k1.conductor, 1), static_cast<i64>(l)), e.dim(i));
                CHECK(c.conj() == c);
            }
    }
}
