#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionforge/fusion_ring.hpp"
#include "fusionforge/quantum_group.hpp"

namespace fusionforge {

using CycMatrix = std::vector<std::vector<CycElem>>;

struct ModularData {
    CategoryHandle category;
    std::vector<Weight> weights;
    CycMatrix weyl_sums;      // unnormalized alternating sums over W
    Rational weyl_norm;       // weyl_sums * weyl_sums^dagger = weyl_norm * I
    CycElem phase;            // in {1, -1, i, -i}, makes the first entry positive
    CycMatrix S;              // phase * weyl_sums / sqrt(weyl_norm)
    std::vector<RootOfUnity> twist_values;
    std::vector<CycElem> twists;
    std::vector<CycElem> T_diag;  // twists themselves; the cube root of xi is left unchosen
    std::vector<CycElem> qdims;
    CycElem total_dimension;
    CycElem gauss_sum_p;
    RootOfUnity central_charge;

    u64 t_order() const;
};

// weyl_cap bounds the rank for which the Weyl group is enumerated
ModularData modular_data(const CategoryHandle& c, int weyl_cap = 4);
CycMatrix s_matrix(const CategoryHandle& c, int weyl_cap = 4);

RootOfUnity twist_value(const CategoryHandle& c, const Weight& w);
CycElem twist(const CategoryHandle& c, const Weight& w);
std::vector<CycElem> t_matrix(const CategoryHandle& c);
CycElem gauss_sum(const CategoryHandle& c);

// s_{lambda mu} / s_{0 mu}
CycElem verlinde_eigenvalue(const ModularData& md, std::size_t lambda, std::size_t mu);
SubfieldHandle verlinde_field(const ModularData& md);

struct VerlindePrediction {
    SubfieldHandle field;
    // the stated field and the one reached in its proof disagree; the
    // proof's value is stored
    bool statement_proof_mismatch = false;
    SubfieldHandle stated_field;
};

// empty when no closed form covers (g, k)
std::optional<VerlindePrediction> verlinde_field_prediction(const CategoryHandle& c);

struct ModularChecks {
    bool symmetric = false;
    bool unitary = false;
    bool first_row_positive = false;
    bool eigenvalue_is_qdim = false;  // verlinde_eigenvalue(lambda, 0) = qdim(lambda)
    bool gauss_exact = false;         // p^2 = dim * xi^2
    double gauss_error = 1.0;         // |p / sqrt(dim) - xi|
    bool st_relation = false;
    std::string st_convention;
    double st_error = 1.0;
    bool distinct_rows = false;       // no two simples share an S row

    bool all() const {
        return symmetric && unitary && first_row_positive && eigenvalue_is_qdim && gauss_exact && gauss_error < 1e-9 &&
               st_relation && distinct_rows;
    }
};

ModularChecks check_modular_data(const ModularData& md);

// t(lambda) = sum j l_j; for type A checks that each eigenvalue times
// zeta_{(n+1) kappa}^{-t(lambda) t(mu + rho)} lies in Q(zeta_kappa)
bool check_type_a_eigenvalue_classes(const ModularData& md);

// Verlinde formula evaluated at the given binary precision and rounded;
// throws std::runtime_error when a coefficient is not within 2^-40 of an
// integer
FusionRing grothendieck_ring(const ModularData& md, long precision = 128);

std::string weight_label(const Weight& w);

}  // namespace fusionforge
