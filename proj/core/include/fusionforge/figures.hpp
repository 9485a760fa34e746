#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "fusionforge/bounds.hpp"
#include "fusionforge/quantum_group.hpp"

namespace fusionforge {

// ---- order bounds for the central charge, N = 1..10
struct FigKRow {
    u64 N;
    u64 closed_form;  // f_bound(2N) / 3
    u64 oracle;       // f_bound_oracle(2N) / 3
    u64 golden;
};
std::vector<FigKRow> figure_K(u64 max_n = 10);
const std::vector<u64>& figure_K_golden();

// ---- dimension-field sweep over (g, k)
struct SweepOptions {
    u64 max_alcove = 2000;
    int max_rank = 12;  // for the classical families, whose alcoves stay small as rank grows
};

struct SweepCase {
    char type_letter;
    int rank;
    int level;
    std::size_t alcove;
    bool exceptional = false;
    FieldPair computed;
    FieldPair expected;
    bool matches = false;
    std::vector<SubfieldHandle> distinct_fields;  // the K_lambda that occur
    bool fields_in_Q_K0_K1 = false;               // every K_lambda is Q, K0 or K1
    bool component_consistent = false;            // parity bit <=> K0(d) != K0
    RootOfUnity charge;
    ChargeBound bound;
    bool charge_divides = false;
    double millis = 0;

    std::string name() const;
};

std::vector<std::tuple<char, int, int>> sweep_cases(const SweepOptions& opt = {});
SweepCase run_sweep_case(char type_letter, int rank, int level);
std::vector<SweepCase> figure_B_sweep(const SweepOptions& opt = {});

// ---- the degree <= 9 enumeration of K0
using CategoryKey = std::tuple<char, int, int>;      // (type, rank, level)
using FamilyKey = std::pair<char, int>;              // (type, level), every rank

struct FieldBlock {
    std::string name;  // golden key: Q, Q5, sqrt6, ...
    SubfieldHandle field;
    std::vector<CategoryKey> categories;  // sorted
    std::vector<FamilyKey> families;      // sorted
};

struct FigA {
    int max_degree = 9;
    std::vector<FieldBlock> blocks;  // by degree, then conductor
    std::vector<int> empty_degrees;
};

FigA figure_A_enumeration(int max_degree = 9);
FigA figure_A_golden();
SubfieldHandle golden_field(const std::string& key);

struct FigADiff {
    std::string field;
    int degree;
    std::vector<CategoryKey> missing_from_golden;
    std::vector<CategoryKey> extra_in_golden;
    std::vector<FamilyKey> families_missing_from_golden;
    std::vector<FamilyKey> families_extra_in_golden;
    bool operator==(const FigADiff&) const = default;
};
std::vector<FigADiff> compare_figure_A(const FigA& computed, const FigA& golden);

std::string category_key_name(const CategoryKey& c);

}  // namespace fusionforge
