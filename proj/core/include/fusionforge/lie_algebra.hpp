#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "fusionforge/numtheory.hpp"

namespace fusionforge {

using Weight = std::vector<int>;  // coordinates on the fundamental weights
using IntMatrix = std::vector<std::vector<int>>;

// Simple Lie algebra in Bourbaki numbering (0-based indices here).
// Inner products are normalized so that short roots have squared length 2.
struct AlgebraData {
    char type_letter = 'A';
    int rank = 1;
    IntMatrix cartan;                  // cartan[i][j] = <alpha_i, alpha_j^vee>
    std::vector<int> half_lengths;     // (alpha_i, alpha_i) / 2, short roots 1
    IntMatrix positive_roots_simple;   // coefficients on simple roots
    IntMatrix positive_roots;          // same roots on fundamental weights
    Weight rho;
    std::vector<std::vector<mpq_class>> form;  // (Lambda_i, Lambda_j)
    int form_denominator = 1;          // lcm of the denominators of form
    IntMatrix scaled_form;             // form_denominator * form
    int h_dual = 2;
    int lacing_m = 1;
    std::vector<int> comarks;
    int dim_g = 3;

    std::string name() const;
};

AlgebraData build_algebra(char type_letter, int rank);
bool valid_type(char type_letter, int rank);
// h_dual without building the root system
int dual_coxeter_number(char type_letter, int rank);

int level_of(const AlgebraData& g, const Weight& w);
// all dominant weights of level <= k, lexicographic
std::vector<Weight> weyl_alcove(const AlgebraData& g, int k);
// number of alcove weights, without enumerating them
u64 alcove_size(const AlgebraData& g, int k);

// (alpha, w) for the r-th positive root, in the short-root-2 normalization
int root_pairing(const AlgebraData& g, std::size_t r, const Weight& w);
Weight plus_rho(const Weight& w);
// -w0(w)
Weight dual_weight(const AlgebraData& g, const Weight& w);
// form_denominator * (x, y)
i64 scaled_inner(const AlgebraData& g, const Weight& x, const Weight& y);

struct WeylElement {
    IntMatrix matrix;  // acts on fundamental-weight coordinate columns
    int det = 1;
};

u64 weyl_group_order(const AlgebraData& g);
// BFS closure of the simple reflections; throws when rank exceeds cap
std::vector<WeylElement> weyl_group(const AlgebraData& g, int rank_cap = 4);
Weight act(const WeylElement& w, const Weight& x);

// Visits w(x) with sign det(w) for every w in W, x regular dominant, without
// storing the group.  Each non-dominant point is reached only from s_j of it,
// j its first negative coordinate, so the descent tree covers W once.
template <class Visit>
void for_each_orbit_point(const AlgebraData& g, const Weight& x, Visit&& visit) {
    const int n = g.rank;
    std::vector<Weight> stack{x};
    std::vector<int> sign{1};
    while (!stack.empty()) {
        Weight v = std::move(stack.back());
        int s = sign.back();
        stack.pop_back();
        sign.pop_back();
        visit(static_cast<const Weight&>(v), s);
        for (int i = 0; i < n; ++i) {
            if (v[i] <= 0) continue;
            Weight u = v;
            for (int j = 0; j < n; ++j) u[j] -= v[i] * g.cartan[i][j];
            int first = 0;
            while (u[first] >= 0) ++first;
            if (first != i) continue;
            stack.push_back(std::move(u));
            sign.push_back(-s);
        }
    }
}

}  // namespace fusionforge
