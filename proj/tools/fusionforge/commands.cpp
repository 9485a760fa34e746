#include "fusionforge/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <stdexcept>

#include "fusionforge/bounds.hpp"
#include "fusionforge/figures.hpp"
#include "fusionforge/fusion_io.hpp"
#include "fusionforge/fusion_ring.hpp"
#include "fusionforge/modular_data.hpp"
#include "fusionforge/quantum_group.hpp"

namespace fusionforge::cli {

using nlohmann::ordered_json;

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ordered_json field_json(const SubfieldHandle& f) {
    ordered_json j;
    j["name"] = describe(f);
    j["degree"] = field_degree(f);
    j["conductor"] = f.conductor;
    return j;
}

ordered_json labels_of(const FusionRing& r, const BasisSet& s) {
    ordered_json j = ordered_json::array();
    for (int i : s) j.push_back(r.labels()[i]);
    return j;
}

ordered_json grading_json(const FusionRing& r, const GradingPartition& g) {
    ordered_json j;
    j["group"] = g.group_name();
    j["order"] = g.group_order();
    j["components"] = ordered_json::array();
    for (const auto& c : g.components) j["components"].push_back(labels_of(r, c));
    return j;
}

ordered_json charge_bound_json(const ChargeBound& b) {
    ordered_json j;
    j["exponent"] = b.exponent;
    j["doubled"] = b.doubled;
    j["bound"] = b.bound.get_str();
    return j;
}

FusionRing load_ring(const std::string& path) {
    if (path.empty()) throw InputError("no fusion-ring file given");
    if (!std::filesystem::exists(path)) throw InputError("cannot open " + path);
    return read_fusion_ring(path);
}

CategoryHandle load_category(const RunConfig& cfg) {
    if (!valid_type(cfg.type_letter, cfg.rank))
        throw InputError(std::string("no simple Lie algebra of type ") + cfg.type_letter + std::to_string(cfg.rank));
    if (cfg.level < 1) throw InputError("level must be positive");
    return make_category(cfg.type_letter, cfg.rank, cfg.level);
}

std::string fraction_of(const RootOfUnity& x) { return x.fraction.get_str(); }

}  // namespace

Result cmd_validate(const RunConfig& cfg) {
    FusionRing r = load_ring(cfg.path);
    Result out;
    auto violations = validate(r);
    out.report["path"] = cfg.path;
    out.report["rank"] = r.rank();
    out.report["valid"] = violations.empty();
    out.report["violations"] = ordered_json::array();
    for (const auto& v : violations) {
        ordered_json j;
        j["axiom"] = v.axiom;
        j["indices"] = v.indices;
        j["message"] = v.message();
        out.report["violations"].push_back(j);
    }
    out.status = violations.empty() ? exit_ok : exit_diff;
    return out;
}

Result cmd_analyze(const RunConfig& cfg) {
    FusionRing r = load_ring(cfg.path);
    auto violations = validate(r);
    if (!violations.empty()) throw InputError("not a fusion ring: " + violations.front().message());

    Result out;
    auto& rep = out.report;
    rep["rank"] = r.rank();
    rep["labels"] = r.labels();

    EmbeddedRing e = attach_cyclotomic_embedding(r, cfg.conductor_bound, ConductorMode::search_bound);
    rep["embedded"] = e.embedded;
    rep["conductor"] = e.conductor;
    if (!e.note.empty()) rep["note"] = e.note;

    rep["dimensions"] = ordered_json::array();
    for (int i = 0; i < r.rank(); ++i) {
        ordered_json d;
        const auto& a = e.dims[i];
        d["label"] = r.labels()[i];
        d["exact"] = a.cyclotomic_form ? ordered_json(a.cyclotomic_form->to_string()) : ordered_json(nullptr);
        d["approx"] = a.value(cfg.precision).to_double();
        d["minimal_polynomial"] = poly_to_string(a.minimal_polynomial);
        rep["dimensions"].push_back(d);
    }

    rep["pointed"] = labels_of(r, pointed_subring(r));
    rep["adjoint"] = labels_of(r, adjoint_subring(r));
    try {
        rep["universal_grading"] = grading_json(r, universal_grading(r));
    } catch (const std::runtime_error& ex) {
        rep["universal_grading"] = ordered_json{{"error", ex.what()}};
    }

    if (!e.embedded) {
        rep["K0"] = nullptr;
        rep["K1"] = nullptr;
        return out;
    }

    DimensionalGrading dg = dimensional_grading(e);
    rep["K0"] = field_json(dg.K0);
    rep["K1"] = field_json(dg.K1);

    // one entry per distinct K(d_i), smallest degree first
    std::map<std::pair<u64, SubfieldHandle>, BasisSet> tower;
    for (int i = 0; i < r.rank(); ++i) tower[{field_degree(dg.fields[i]), dg.fields[i]}].push_back(i);
    rep["fields"] = ordered_json::array();
    for (int i = 0; i < r.rank(); ++i) rep["fields"].push_back({{"label", r.labels()[i]}, {"field", describe(dg.fields[i])}});
    rep["tower"] = ordered_json::array();
    for (const auto& [key, members] : tower) {
        ordered_json t = field_json(key.second);
        t["members"] = labels_of(r, members);
        t["in_K0"] = subfield_leq(key.second, dg.K0);
        rep["tower"].push_back(t);
    }
    rep["dimensional_grading"] = grading_json(r, dg.partition);
    rep["dimensional_grading"]["elementary_abelian_2"] = dg.partition.is_elementary_abelian_2();

    // FPdim(b_i), FPdim(b_j) lie in Q(FPdim(b_i + b_j)) for every pair
    std::size_t checked = 0, passed = 0;
    for (int i = 0; i < r.rank(); ++i)
        for (int j = i; j < r.rank(); ++j) {
            std::vector<Rational> x1(r.rank(), Rational(0)), x2(r.rank(), Rational(0));
            x1[i] = 1;
            x2[j] = 1;
            ++checked;
            passed += check_main_lemma(e, x1, x2);
        }
    rep["main_lemma"] = {{"pairs_checked", checked}, {"passed", passed}};
    if (passed != checked) out.status = exit_diff;
    return out;
}

Result cmd_quantum(const RunConfig& cfg) {
    CategoryHandle c = load_category(cfg);
    Result out;
    auto& rep = out.report;
    rep["category"] = c.name();
    rep["kappa"] = c.kappa;

    DimensionFields f = dimension_fields(c);
    rep["alcove_size"] = f.weights.size();
    rep["weights"] = ordered_json::array();
    for (std::size_t i = 0; i < f.weights.size(); ++i) {
        ordered_json w;
        w["weight"] = weight_label(f.weights[i]);
        w["qdim"] = qdim(c, f.weights[i]).to_string();
        w["approx"] = qdim_numeric(c, f.weights[i]);
        w["field"] = describe(f.per_weight[i]);
        w["component"] = dimensional_component(c, f.weights[i]);
        rep["weights"].push_back(w);
    }
    rep["K0"] = field_json(f.K0);
    rep["K1"] = field_json(f.K1);

    FieldPair expected = expected_dimension_fields(c.algebra.type_letter, c.algebra.rank, c.level);
    bool exceptional = is_exceptional_level(c.algebra.type_letter, c.algebra.rank, c.level);
    bool matches = expected == FieldPair{f.K0, f.K1};
    rep["table"] = {{"source", exceptional ? "exceptional level" : "closed form"},
                    {"K0", describe(expected.K0)},
                    {"K1", describe(expected.K1)},
                    {"matches", matches}};

    RootOfUnity xi = central_charge_formula(c);
    ChargeBound b = charge_bound_from_fields(f.K0, f.K1);
    bool divides = mpz_divisible_ui_p(b.bound.get_mpz_t(), xi.order()) != 0;
    rep["central_charge"] = {{"fraction", fraction_of(xi)}, {"order", xi.order()}};
    rep["charge_bound"] = charge_bound_json(b);
    rep["charge_bound"]["divides"] = divides;
    rep["charge_bound"]["attained"] = b.bound == xi.order();
    if (!matches || !divides) out.status = exit_diff;

    if (!cfg.modular) return out;
    if (c.algebra.rank > cfg.weyl_cap) {
        rep["modular"] = {{"skipped", "rank " + std::to_string(c.algebra.rank) + " exceeds the Weyl-group cap " +
                                          std::to_string(cfg.weyl_cap) +
                                          "; S is a sum over the Weyl group, raise --weyl-cap to force it"}};
        out.status = exit_input;
        return out;
    }
    ModularData md = modular_data(c, cfg.weyl_cap);
    ModularChecks chk = check_modular_data(md);
    ordered_json m;
    m["S"] = ordered_json::array();
    for (const auto& row : md.S) {
        ordered_json jr = ordered_json::array();
        for (const auto& x : row) jr.push_back(x.to_string());
        m["S"].push_back(jr);
    }
    m["twists"] = ordered_json::array();
    for (const auto& t : md.twist_values) m["twists"].push_back(fraction_of(t));
    m["T_order"] = md.t_order();
    m["central_charge"] = {{"fraction", fraction_of(md.central_charge)}, {"order", md.central_charge.order()}};
    m["checks"] = {{"symmetric", chk.symmetric},
                   {"unitary", chk.unitary},
                   {"first_row_positive", chk.first_row_positive},
                   {"eigenvalue_is_qdim", chk.eigenvalue_is_qdim},
                   {"gauss_exact", chk.gauss_exact},
                   {"gauss_error", chk.gauss_error},
                   {"st_relation", chk.st_relation},
                   {"st_convention", chk.st_convention},
                   {"distinct_rows", chk.distinct_rows}};
    m["verlinde_field"] = describe(verlinde_field(md));
    if (auto p = verlinde_field_prediction(c)) {
        m["verlinde_prediction"] = {{"field", describe(p->field)}, {"matches", p->field == verlinde_field(md)}};
        if (p->statement_proof_mismatch) m["verlinde_prediction"]["stated_field"] = describe(p->stated_field);
    }
    FusionRing ring = grothendieck_ring(md, cfg.precision);
    auto violations = validate(ring);
    m["fusion_ring_valid"] = violations.empty();
    if (!cfg.ring_out.empty()) {
        write_fusion_ring(cfg.ring_out, ring);
        m["fusion_ring_file"] = cfg.ring_out;
    } else {
        m["fusion_ring"] = ordered_json::parse(dump_fusion_ring(ring));
    }
    rep["modular"] = m;
    if (!chk.all() || !violations.empty()) out.status = exit_diff;
    return out;
}

namespace {

Result table_K() {
    Result out;
    out.report["table"] = "figK";
    out.report["rows"] = ordered_json::array();
    for (const auto& row : figure_K()) {
        bool ok = row.closed_form == row.golden && row.oracle == row.golden;
        out.report["rows"].push_back(
            {{"N", row.N}, {"closed_form", row.closed_form}, {"oracle", row.oracle}, {"golden", row.golden}, {"match", ok}});
        if (!ok) out.status = exit_diff;
    }
    return out;
}

ordered_json category_list(const std::vector<CategoryKey>& v) {
    ordered_json j = ordered_json::array();
    for (const auto& c : v) j.push_back(category_key_name(c));
    return j;
}

ordered_json family_list(const std::vector<FamilyKey>& v) {
    ordered_json j = ordered_json::array();
    for (const auto& [t, k] : v) j.push_back(std::string(1, t) + "n," + std::to_string(k));
    return j;
}

Result table_A() {
    Result out;
    FigA a = figure_A_enumeration();
    auto diffs = compare_figure_A(a, figure_A_golden());
    out.report["table"] = "figA";
    out.report["max_degree"] = a.max_degree;
    out.report["blocks"] = ordered_json::array();
    for (const auto& b : a.blocks) {
        ordered_json j = field_json(b.field);
        j["key"] = b.name;
        j["families"] = family_list(b.families);
        j["categories"] = category_list(b.categories);
        out.report["blocks"].push_back(j);
    }
    out.report["empty_degrees"] = a.empty_degrees;
    out.report["diffs"] = ordered_json::array();
    for (const auto& d : diffs) {
        out.report["diffs"].push_back({{"field", d.field},
                                       {"degree", d.degree},
                                       {"computed_not_golden", category_list(d.missing_from_golden)},
                                       {"golden_not_computed", category_list(d.extra_in_golden)},
                                       {"families_computed_not_golden", family_list(d.families_missing_from_golden)},
                                       {"families_golden_not_computed", family_list(d.families_extra_in_golden)}});
    }
    if (!diffs.empty()) out.status = exit_diff;
    return out;
}

Result table_B(const RunConfig& cfg) {
    Result out;
    SweepOptions opt;
    opt.max_alcove = cfg.max_alcove;
    opt.max_rank = cfg.max_rank;
    out.report["table"] = "figB";
    out.report["max_alcove"] = opt.max_alcove;
    out.report["max_rank"] = opt.max_rank;
    std::size_t count = 0;
    double millis = 0;
    ordered_json diffs = ordered_json::array();
    std::map<std::string, std::size_t> per_type;
    for (auto [t, n, k] : sweep_cases(opt)) {
        SweepCase s = run_sweep_case(t, n, k);
        ++count;
        millis += s.millis;
        ++per_type[std::string(1, t) + std::to_string(n)];
        if (s.matches) continue;
        diffs.push_back({{"category", s.name()},
                         {"source", s.exceptional ? "exceptional level" : "closed form"},
                         {"computed", {describe(s.computed.K0), describe(s.computed.K1)}},
                         {"table", {describe(s.expected.K0), describe(s.expected.K1)}}});
    }
    out.report["cases"] = count;
    out.report["cases_per_type"] = per_type;
    out.report["millis"] = millis;
    out.report["diffs"] = diffs;
    if (!diffs.empty()) out.status = exit_diff;
    return out;
}

}  // namespace

Result cmd_tables(const RunConfig& cfg) {
    if (cfg.table == "figK") return table_K();
    if (cfg.table == "figA") return table_A();
    if (cfg.table == "figB") return table_B(cfg);
    throw InputError("unknown table " + cfg.table + " (expected figA, figB or figK)");
}

Result cmd_bound(const RunConfig& cfg) {
    Result out;
    auto& rep = out.report;
    if (cfg.exponent) {
        u64 n = *cfg.exponent;
        if (n == 0) throw InputError("exponent must be positive");
        rep["exponent"] = n;
        rep["f(2N)"] = f_bound(2 * n).get_str();
        rep["f(2N)/3"] = charge_order_bound(n).get_str();
        rep["xi^16 = 1 applies"] = prime_power_sixteen_check(n);
        return out;
    }
    if (!cfg.path.empty()) {
        EmbeddedRing e = attach_cyclotomic_embedding(load_ring(cfg.path), cfg.conductor_bound);
        if (!e.embedded) throw InputError("no cyclotomic embedding: " + e.note);
        SubfieldHandle k0 = K0_of(e), k1 = K1_of(e);
        ChargeBound b = charge_bound_from_fields(k0, k1);
        rep["K0"] = field_json(k0);
        rep["K1"] = field_json(k1);
        rep["f(2N)"] = f_bound(2 * b.exponent).get_str();
        rep["charge_bound"] = charge_bound_json(b);
        rep["xi^16 = 1 applies"] = prime_power_sixteen_check(field_exponent(k1));
        return out;
    }
    if (cfg.type_letter) {
        CategoryHandle c = load_category(cfg);
        CategoryChargeReport r = charge_report({c});
        rep["category"] = c.name();
        rep["K0"] = field_json(r.K0);
        rep["K1"] = field_json(r.K1);
        rep["f(2N)"] = f_bound(2 * r.bound.exponent).get_str();
        rep["charge_bound"] = charge_bound_json(r.bound);
        rep["central_charge"] = {{"fraction", fraction_of(r.charge)}, {"order", r.charge.order()}};
        rep["divides"] = r.divides;
        rep["attained"] = r.attains;
        rep["xi^16 = 1 applies"] = r.sixteen_applies;
        if (!r.divides) out.status = exit_diff;
        return out;
    }
    throw InputError("bound needs one of --exponent, --ring or --quantum");
}

Result run(const RunConfig& cfg) {
    try {
        if (cfg.precision < 64) throw InputError("precision must be at least 64 bits");
        if (cfg.command == "validate") return cmd_validate(cfg);
        if (cfg.command == "analyze") return cmd_analyze(cfg);
        if (cfg.command == "quantum") return cmd_quantum(cfg);
        if (cfg.command == "tables") return cmd_tables(cfg);
        if (cfg.command == "bound") return cmd_bound(cfg);
        throw InputError("unknown command " + cfg.command);
    } catch (const InputError& e) {
        return {exit_input, {{"error", e.what()}}};
    } catch (const FormatError& e) {
        return {exit_input, {{"error", e.what()}}};
    } catch (const std::invalid_argument& e) {
        return {exit_input, {{"error", e.what()}}};
    }
}

}  // namespace fusionforge::cli
