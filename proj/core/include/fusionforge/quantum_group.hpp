#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fusionforge/cyclotomic.hpp"
#include "fusionforge/lie_algebra.hpp"

namespace fusionforge {

// C(g, k): the category attached to g at level k.
struct CategoryHandle {
    AlgebraData algebra;
    int level = 1;
    int kappa = 3;  // level + h_dual
    CycElem q;      // zeta_{2 m kappa}

    // [n] = sin(n pi / qdim_modulus()) / sin(pi / qdim_modulus())
    u64 qdim_modulus() const { return static_cast<u64>(algebra.lacing_m) * static_cast<u64>(kappa); }
    std::string name() const;
};

CategoryHandle make_category(char type_letter, int rank, int level);

std::vector<Weight> weyl_alcove(const CategoryHandle& c);
bool in_alcove(const CategoryHandle& c, const Weight& w);

// net multiplicity of each quantum integer [n] in the Weyl dimension product,
// as (n, exponent) pairs with nonzero exponents
std::vector<std::pair<int, int>> qdim_exponents(const CategoryHandle& c, const Weight& w);
CycElem qdim(const CategoryHandle& c, const Weight& w);
double qdim_numeric(const CategoryHandle& c, const Weight& w);
CycElem fpdim_total_category(const CategoryHandle& c);

struct DimensionFields {
    std::vector<Weight> weights;
    std::vector<SubfieldHandle> per_weight;
    SubfieldHandle K0;
    SubfieldHandle K1;
};

// Exact fields of all simple dimensions.  Stabilizers are proposed from
// floating-point Galois conjugates and confirmed modulo split primes whose
// product exceeds twice the largest conjugate, which forces equality.
DimensionFields dimension_fields(const CategoryHandle& c);
SubfieldHandle K0_field(const CategoryHandle& c);
SubfieldHandle K1_field(const CategoryHandle& c);
SubfieldHandle K_lambda(const CategoryHandle& c, const Weight& w);

// parity of the weight in the grading by Gal(K1/K0); 0 for types with
// trivial universal grading group
int dimensional_component(const CategoryHandle& c, const Weight& w);

struct FieldPair {
    SubfieldHandle K0;
    SubfieldHandle K1;
    friend bool operator==(const FieldPair&, const FieldPair&) = default;
};

class ExceptionalLevel : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

bool is_exceptional_level(char type_letter, int rank, int level);
std::vector<int> exceptional_levels(char type_letter, int rank);
// closed-form row of the dimension-field table; throws ExceptionalLevel
FieldPair figure_B_prediction(const CategoryHandle& c);
FieldPair figure_B_prediction(char type_letter, int rank, int level);
// tabulated fields at exceptional levels; throws std::invalid_argument otherwise
FieldPair exceptional_level_fields(char type_letter, int rank, int level);
// closed form where it applies, tabulated value at exceptional levels
FieldPair expected_dimension_fields(char type_letter, int rank, int level);

struct ClosedFormDefect {
    char type_letter;
    int rank;
    int level;
    FieldPair computed;
};
// non-exceptional levels where direct computation contradicts the closed form
const std::vector<ClosedFormDefect>& closed_form_defects();

// closed form, tabulated exceptions, and the computed value at each defect
FieldPair reference_dimension_fields(char type_letter, int rank, int level);

// exp(2 pi i * fraction), fraction reduced into [0, 1)
struct RootOfUnity {
    mpq_class fraction;
    u64 order() const { return fraction.get_den().get_ui(); }
    CycElem value() const;
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

RootOfUnity make_root_of_unity(const mpq_class& fraction);
RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);

// exp(2 pi i / 8 * k dim g / kappa)
RootOfUnity central_charge_formula(const CategoryHandle& c);
RootOfUnity central_charge_formula(const std::vector<CategoryHandle>& factors);

// named fields that appear in the tables
SubfieldHandle sqrt_field(long d);
// sum of coef * cos(a pi / denominator) over (coef, a)
SubfieldHandle field_of_cos_sum(const std::vector<std::pair<i64, i64>>& terms, u64 denominator);

}  // namespace fusionforge
