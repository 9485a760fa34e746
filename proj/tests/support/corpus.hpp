#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionforge/fusion_ring.hpp"

namespace fusionforge::testing {

struct NamedRing {
    std::string name;
    FusionRing ring;
};

// abelian groups of order <= max_order, one per isomorphism class
std::vector<NamedRing> abelian_group_rings(int max_order = 12);

// the rank 3 ring S (X^2 = 1 + Y), the Fibonacci ring T, and S x T
FusionRing ring_S();
FusionRing ring_T();
FusionRing ring_S_times_T();

// Grothendieck rings read off small quantum-group modular data
std::vector<NamedRing> verlinde_rings();

std::vector<NamedRing> full_corpus();

// a basis bijection p with c_{p(i) p(j)}^{p(k)} = c_{ij}^k, by backtracking
std::optional<std::vector<int>> ring_isomorphism(const FusionRing& a, const FusionRing& b);

// Property checks shared by the unit and acceptance suites; each returns
// an empty string on success, otherwise a description of the first failure.
std::string check_fpdim_homomorphism(const EmbeddedRing& e);
std::string check_squares_in_K0(const EmbeddedRing& e);
std::string check_subring_dims_in_K0(const EmbeddedRing& e);
// every decomposition x = x1 + x2 with coefficients of x at most max_coef
std::string check_main_lemma_exhaustive(const EmbeddedRing& e, int max_coef = 2);
std::string check_dimensional_grading(const EmbeddedRing& e);
std::string check_universal_coarsening(const EmbeddedRing& e);

}  // namespace fusionforge::testing
