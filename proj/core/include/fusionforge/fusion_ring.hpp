#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionforge/cyclotomic.hpp"
#include "fusionforge/poly.hpp"

namespace fusionforge {

// Based ring with basis b_0 = 1, ..., b_{r-1}; c(i, j, k) is the
// multiplicity of b_k in b_i b_j.  Immutable once built.
class FusionRing {
public:
    FusionRing();  // rank one
    // constants flattened with i major, k minor; throws on shape errors only
    FusionRing(std::vector<std::string> labels, std::vector<int> duality, std::vector<int> constants);

    int rank() const { return rank_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& duality() const { return duality_; }
    int dual(int i) const { return duality_[i]; }
    int operator()(int i, int j, int k) const { return c_[(static_cast<std::size_t>(i) * rank_ + j) * rank_ + k]; }
    const std::vector<int>& constants() const { return c_; }

    friend bool operator==(const FusionRing&, const FusionRing&) = default;

private:
    int rank_ = 1;
    std::vector<std::string> labels_{"1"};
    std::vector<int> duality_{0};
    std::vector<int> c_{1};
};

struct Violation {
    std::string axiom;
    std::vector<int> indices;
    std::string message() const;
};

// empty iff R satisfies every fusion ring axiom
std::vector<Violation> validate(const FusionRing& r);

// (N_i)_{jk} = c_{ij}^k
ZMatrix fusion_matrix(const FusionRing& r, int i);

// Real algebraic number given by its minimal polynomial and an isolating
// interval, optionally with an exact cyclotomic value.
struct AlgebraicReal {
    ZPoly minimal_polynomial;
    RootInterval interval;
    std::optional<CycElem> cyclotomic_form;

    int degree() const { return fusionforge::degree(minimal_polynomial); }
    BigFloat value(long precision = 128) const;
    double approx() const { return value(64).to_double(); }
    std::string to_string() const;
};

// the real root of f nearest to guess, reduced to its minimal polynomial
AlgebraicReal algebraic_from_charpoly(const ZPoly& f, const BigFloat& guess);

AlgebraicReal fpdim(const FusionRing& r, int i);
std::vector<AlgebraicReal> fpdims(const FusionRing& r);

struct FusionElement {
    std::vector<long> coefficients;
};

AlgebraicReal fpdim_of_element(const FusionRing& r, const FusionElement& x);
AlgebraicReal fpdim_total(const FusionRing& r);

struct EmbeddedRing {
    FusionRing ring;
    std::vector<AlgebraicReal> dims;
    bool embedded = false;  // every dim carries a cyclotomic form
    u64 conductor = 1;
    std::string note;

    const CycElem& dim(int i) const { return *dims[i].cyclotomic_form; }
};

enum class ConductorMode { exact, search_bound };

// Finds each FP dimension inside Q(zeta_N), either at the given N or by
// trying N up to the bound; failure keeps dims numeric and sets a note.
EmbeddedRing attach_cyclotomic_embedding(const FusionRing& r, u64 n = 2000,
                                         ConductorMode mode = ConductorMode::search_bound);

using BasisSet = std::vector<int>;  // sorted basis indices

BasisSet pointed_subring(const FusionRing& r);
BasisSet adjoint_subring(const FusionRing& r);
BasisSet subring_generated_by(const FusionRing& r, const BasisSet& seed);
bool is_subring(const FusionRing& r, const BasisSet& s);
bool is_multiplicatively_generated_by(const FusionRing& r, int i);

struct GradingPartition {
    std::vector<int> component_of;             // per basis element
    std::vector<std::vector<int>> components;  // members, component 0 trivial
    std::vector<std::vector<int>> product;     // component multiplication table
    bool abelian = true;
    std::vector<u64> invariant_factors;        // of the group when abelian

    std::size_t group_order() const { return components.size(); }
    bool is_elementary_abelian_2() const;
    std::string group_name() const;
};

// Throws std::runtime_error when components do not multiply like a group.
GradingPartition universal_grading(const FusionRing& r);

struct DimensionalGrading {
    GradingPartition partition;
    SubfieldHandle K0;
    SubfieldHandle K1;
    std::vector<SubfieldHandle> fields;  // K(d_i) per basis element
};

// Components are the classes of K0(d_i); needs an embedding.
DimensionalGrading dimensional_grading(const EmbeddedRing& e);

// K0 = Q(FPdim(R)), K1 = Q(all d_i)
SubfieldHandle K0_of(const EmbeddedRing& e);
SubfieldHandle K1_of(const EmbeddedRing& e);

// FPdim(x1), FPdim(x2) both lie in Q(FPdim(x1 + x2)); nonnegative rational
// coefficients are accepted
bool check_main_lemma(const EmbeddedRing& e, const std::vector<Rational>& x1, const std::vector<Rational>& x2);

BasisSet subring_R_K(const EmbeddedRing& e, const SubfieldHandle& k);

FusionRing product_ring(const FusionRing& s, const FusionRing& t);

// small named rings
FusionRing group_ring_cyclic(const std::vector<int>& orders);  // product of cyclic groups
FusionRing fibonacci_ring();
FusionRing ising_ring();

}  // namespace fusionforge
