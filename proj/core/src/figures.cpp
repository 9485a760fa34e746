#include "fusionforge/figures.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <regex>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "golden_data.hpp"

namespace fusionforge {

// ---------------------------------------------------------------------------
// order bounds

const std::vector<u64>& figure_K_golden() {
    static const std::vector<u64> values = [] {
        auto j = nlohmann::json::parse(golden::figK_json);
        return j.at("f(2N)/3").get<std::vector<u64>>();
    }();
    return values;
}

std::vector<FigKRow> figure_K(u64 max_n) {
    const auto& gold = figure_K_golden();
    std::vector<FigKRow> rows;
    for (u64 n = 1; n <= max_n; ++n)
        rows.push_back({n, charge_order_bound(n).get_ui(), f_bound_oracle(2 * n) / 3, n <= gold.size() ? gold[n - 1] : 0});
    return rows;
}

// ---------------------------------------------------------------------------
// dimension-field sweep

std::string SweepCase::name() const { return category_key_name({type_letter, rank, level}); }

std::string category_key_name(const CategoryKey& c) {
    auto [t, n, k] = c;
    return std::string(1, t) + std::to_string(n) + "," + std::to_string(k);
}

namespace {

const std::vector<std::pair<char, int>>& exceptional_types() {
    static const std::vector<std::pair<char, int>> v = {{'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
    return v;
}

int min_rank(char t) {
    switch (t) {
    case 'A': return 1;
    case 'B': return 3;
    case 'C': return 2;
    case 'D': return 4;
    }
    throw std::invalid_argument("not a classical type");
}

}  // namespace

std::vector<std::tuple<char, int, int>> sweep_cases(const SweepOptions& opt) {
    std::vector<std::tuple<char, int, int>> out;
    auto add_levels = [&](char t, int n) {
        AlgebraData g = build_algebra(t, n);
        for (int k = 1; alcove_size(g, k) <= opt.max_alcove; ++k) out.emplace_back(t, n, k);
    };
    for (char t : std::string("ABCD"))
        for (int n = min_rank(t); n <= opt.max_rank; ++n) add_levels(t, n);
    for (auto [t, n] : exceptional_types()) add_levels(t, n);
    return out;
}

SweepCase run_sweep_case(char t, int n, int k) {
    auto t0 = std::chrono::steady_clock::now();
    CategoryHandle c = make_category(t, n, k);
    DimensionFields f = dimension_fields(c);
    SweepCase s;
    s.type_letter = t;
    s.rank = n;
    s.level = k;
    s.alcove = f.weights.size();
    s.exceptional = is_exceptional_level(t, n, k);
    s.computed = {f.K0, f.K1};
    s.expected = expected_dimension_fields(t, n, k);
    s.matches = s.computed == s.expected;

    std::set<SubfieldHandle> distinct(f.per_weight.begin(), f.per_weight.end());
    s.distinct_fields.assign(distinct.begin(), distinct.end());
    s.fields_in_Q_K0_K1 = std::all_of(s.distinct_fields.begin(), s.distinct_fields.end(), [&](const SubfieldHandle& x) {
        return x == rational_field() || x == f.K0 || x == f.K1;
    });

    bool graded_type = t == 'A' || t == 'B' || t == 'C' || t == 'D' || (t == 'E' && n == 7);
    s.component_consistent = true;
    // only meaningful when the dimensional grading is nontrivial
    if (graded_type && f.K1 != f.K0) {
        std::map<SubfieldHandle, bool> outside_of;
        for (const auto& x : s.distinct_fields) outside_of[x] = field_join(x, f.K0) != f.K0;
        for (std::size_t i = 0; i < f.weights.size(); ++i) {
            bool outside = outside_of.at(f.per_weight[i]);
            if ((dimensional_component(c, f.weights[i]) == 1) != outside) s.component_consistent = false;
        }
    }

    s.charge = central_charge_formula(c);
    s.bound = charge_bound_from_fields(f.K0, f.K1);
    s.charge_divides = mpz_divisible_ui_p(s.bound.bound.get_mpz_t(), s.charge.order()) != 0;
    s.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

std::vector<SweepCase> figure_B_sweep(const SweepOptions& opt) {
    std::vector<SweepCase> out;
    for (auto [t, n, k] : sweep_cases(opt)) out.push_back(run_sweep_case(t, n, k));
    return out;
}

// ---------------------------------------------------------------------------
// degree <= 9 enumeration

SubfieldHandle golden_field(const std::string& key) {
    if (key == "Q") return rational_field();
    if (key == "sqrt6") return sqrt_field(6);
    if (key == "sqrt21") return sqrt_field(21);
    if (key == "cos2/13-cos3/13") return field_of_cos_sum({{1, 2}, {-1, 3}}, 13);
    if (key == "cos2/35+cos12/35") return field_of_cos_sum({{1, 2}, {1, 12}}, 35);
    static const std::regex qn("Q([0-9]+)");
    std::smatch m;
    if (std::regex_match(key, m, qn)) return real_cyclotomic(std::stoull(m[1]));
    throw std::invalid_argument("unknown field key " + key);
}

namespace {

// fixed levels at which K0 = Q for every rank of the classical family
const std::vector<FamilyKey>& rational_families() {
    static const std::vector<FamilyKey> v = {{'A', 1}, {'B', 1}, {'B', 2}, {'D', 1}, {'D', 2}};
    return v;
}

void expand_entry(std::string e, std::set<CategoryKey>& cats, std::set<FamilyKey>& fams) {
    if (!e.empty() && e[0] == '*') e.erase(0, 1);
    auto colon = e.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad table entry " + e);
    std::string type = e.substr(0, colon), rest = e.substr(colon + 1);
    if (type.size() == 2) {  // E6:k, F4:k, G2:k
        cats.insert({type[0], type[1] - '0', std::stoi(rest)});
        return;
    }
    char t = type[0];
    auto comma = rest.find(',');
    std::string a = rest.substr(0, comma), b = rest.substr(comma + 1);
    if (a != "n") {
        cats.insert({t, std::stoi(a), std::stoi(b)});
        return;
    }
    static const std::regex family("([0-9]+)(-(2?)n)?");
    std::smatch m;
    if (!std::regex_match(b, m, family)) throw std::invalid_argument("bad family " + e);
    int c = std::stoi(m[1]);
    if (!m[2].matched) {
        fams.insert({t, c});
        return;
    }
    int step = m[3].length() ? 2 : 1;
    for (int n = min_rank(t); c - step * n >= 1; ++n) {
        int k = c - step * n;
        if (!is_exceptional_level(t, n, k)) cats.insert({t, n, k});
    }
}

int degree_of(const SubfieldHandle& f) { return static_cast<int>(field_degree(f)); }

void sort_blocks(FigA& a) {
    for (auto& b : a.blocks) {
        std::sort(b.categories.begin(), b.categories.end());
        b.categories.erase(std::unique(b.categories.begin(), b.categories.end()), b.categories.end());
        std::sort(b.families.begin(), b.families.end());
        b.families.erase(std::unique(b.families.begin(), b.families.end()), b.families.end());
    }
    std::sort(a.blocks.begin(), a.blocks.end(), [](const FieldBlock& x, const FieldBlock& y) {
        return std::make_pair(degree_of(x.field), x.field) < std::make_pair(degree_of(y.field), y.field);
    });
    a.empty_degrees.clear();
    for (int d = 1; d <= a.max_degree; ++d)
        if (std::none_of(a.blocks.begin(), a.blocks.end(), [&](const FieldBlock& b) { return degree_of(b.field) == d; }))
            a.empty_degrees.push_back(d);
}

std::string field_key(const SubfieldHandle& f) {
    static const std::vector<std::string> named = {"Q", "sqrt6", "sqrt21", "cos2/13-cos3/13", "cos2/35+cos12/35"};
    for (const auto& k : named)
        if (golden_field(k) == f) return k;
    if (f == real_cyclotomic(f.conductor)) return "Q" + std::to_string(f.conductor);
    if (f.conductor % 2 == 1 && f == real_cyclotomic(2 * f.conductor)) return "Q" + std::to_string(f.conductor);
    return describe(f);
}

}  // namespace

FigA figure_A_golden() {
    auto j = nlohmann::json::parse(golden::figA_json);
    FigA out;
    out.max_degree = j.at("max_degree").get<int>();
    for (const auto& b : j.at("blocks")) {
        std::string key = b.at("field").get<std::string>();
        if (key == "none") continue;
        std::set<CategoryKey> cats;
        std::set<FamilyKey> fams;
        for (const auto& e : b.at("entries")) expand_entry(e.get<std::string>(), cats, fams);
        SubfieldHandle f = golden_field(key);
        auto it = std::find_if(out.blocks.begin(), out.blocks.end(), [&](const FieldBlock& x) { return x.field == f; });
        if (it == out.blocks.end()) {
            out.blocks.push_back({key, f, {}, {}});
            it = out.blocks.end() - 1;
        }
        it->categories.insert(it->categories.end(), cats.begin(), cats.end());
        it->families.insert(it->families.end(), fams.begin(), fams.end());
    }
    sort_blocks(out);
    return out;
}

FigA figure_A_enumeration(int max_degree) {
    std::map<SubfieldHandle, std::pair<std::set<CategoryKey>, std::set<FamilyKey>>> groups;
    for (const auto& fam : rational_families()) groups[rational_field()].second.insert(fam);
    auto consider = [&](char t, int n, int k) {
        SubfieldHandle k0 = reference_dimension_fields(t, n, k).K0;
        if (degree_of(k0) <= max_degree) groups[k0].first.insert({t, n, k});
    };
    // K0 has degree >= phi(kappa)/2 with kappa > rank, so these ranges are exhaustive for degree <= 9
    const int max_rank = 60, max_level = 70;
    for (char t : std::string("ABCD"))
        for (int n = min_rank(t); n <= max_rank; ++n)
            for (int k = 1; k <= max_level; ++k) {
                if (std::find(rational_families().begin(), rational_families().end(), FamilyKey{t, k}) !=
                    rational_families().end())
                    continue;
                consider(t, n, k);
            }
    for (auto [t, n] : exceptional_types())
        for (int k = 1; k <= max_level; ++k) consider(t, n, k);

    FigA out;
    out.max_degree = max_degree;
    for (auto& [f, sets] : groups)
        out.blocks.push_back({field_key(f), f, {sets.first.begin(), sets.first.end()}, {sets.second.begin(), sets.second.end()}});
    sort_blocks(out);
    return out;
}

std::vector<FigADiff> compare_figure_A(const FigA& computed, const FigA& golden) {
    std::map<SubfieldHandle, std::pair<const FieldBlock*, const FieldBlock*>> all;
    for (const auto& b : computed.blocks) all[b.field].first = &b;
    for (const auto& b : golden.blocks) all[b.field].second = &b;
    std::vector<FigADiff> out;
    auto minus = [](const auto& a, const auto& b) {
        std::decay_t<decltype(a)> r;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    };
    static const FieldBlock empty{};
    for (const auto& [f, pair] : all) {
        const FieldBlock& c = pair.first ? *pair.first : empty;
        const FieldBlock& g = pair.second ? *pair.second : empty;
        FigADiff d{pair.second ? g.name : c.name,
                   degree_of(f),
                   minus(c.categories, g.categories),
                   minus(g.categories, c.categories),
                   minus(c.families, g.families),
                   minus(g.families, c.families)};
        if (!d.missing_from_golden.empty() || !d.extra_in_golden.empty() || !d.families_missing_from_golden.empty() ||
            !d.families_extra_in_golden.empty())
            out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [](const FigADiff& a, const FigADiff& b) {
        return std::make_pair(a.degree, a.field) < std::make_pair(b.degree, b.field);
    });
    return out;
}

}  // namespace fusionforge
