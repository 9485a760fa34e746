#include "fusionforge/render.hpp"

#include <iomanip>

namespace fusionforge::cli {

using nlohmann::ordered_json;

namespace {

std::string joined(const ordered_json& a, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += sep;
        s += a[i].is_string() ? a[i].get<std::string>() : a[i].dump();
    }
    return s;
}

std::string yes(const ordered_json& b) { return b.get<bool>() ? "yes" : "no"; }

void validate_text(const ordered_json& r, std::ostream& out) {
    if (r["valid"].get<bool>()) {
        out << "valid fusion ring of rank " << r["rank"] << "\n";
        return;
    }
    for (const auto& v : r["violations"]) out << v["message"].get<std::string>() << "\n";
}

void grading_text(const char* title, const ordered_json& g, std::ostream& out) {
    if (g.contains("error")) {
        out << title << ": " << g["error"].get<std::string>() << "\n";
        return;
    }
    out << title << ": " << g["group"].get<std::string>() << "\n";
    for (std::size_t i = 0; i < g["components"].size(); ++i)
        out << "  [" << i << "] " << joined(g["components"][i]) << "\n";
}

void analyze_text(const ordered_json& r, std::ostream& out) {
    out << "rank " << r["rank"] << "\n";
    if (r["embedded"].get<bool>()) out << "embedded in Q(zeta_" << r["conductor"] << ")\n";
    else out << "no cyclotomic embedding: " << r.value("note", std::string()) << "\n";
    out << "dimensions:\n";
    for (const auto& d : r["dimensions"]) {
        out << "  " << d["label"].get<std::string>() << " = ";
        if (d["exact"].is_string()) out << d["exact"].get<std::string>();
        else out << std::setprecision(17) << d["approx"].get<double>() << ", root of " << d["minimal_polynomial"].get<std::string>();
        out << "\n";
    }
    out << "pointed part: " << joined(r["pointed"]) << "\n";
    out << "adjoint part: " << joined(r["adjoint"]) << "\n";
    grading_text("universal grading", r["universal_grading"], out);
    if (r["K0"].is_null()) return;
    out << "K0 = " << r["K0"]["name"].get<std::string>() << "\n";
    out << "K1 = " << r["K1"]["name"].get<std::string>() << "\n";
    out << "field tower:\n";
    for (const auto& t : r["tower"])
        out << "  " << t["name"].get<std::string>() << " (degree " << t["degree"] << "): " << joined(t["members"]) << "\n";
    grading_text("dimensional grading", r["dimensional_grading"], out);
    out << "main lemma: " << r["main_lemma"]["passed"] << "/" << r["main_lemma"]["pairs_checked"] << " pairs\n";
}

void quantum_text(const ordered_json& r, std::ostream& out) {
    out << r["category"].get<std::string>() << ", kappa = " << r["kappa"] << ", " << r["alcove_size"] << " simples\n";
    for (const auto& w : r["weights"])
        out << "  " << w["weight"].get<std::string>() << "  " << w["qdim"].get<std::string>() << "  ~ " << std::setprecision(12)
            << w["approx"].get<double>() << "  " << w["field"].get<std::string>() << "\n";
    const auto& t = r["table"];
    out << "K0 = " << r["K0"]["name"].get<std::string>() << ", K1 = " << r["K1"]["name"].get<std::string>() << "\n";
    out << "table (" << t["source"].get<std::string>() << "): K0 = " << t["K0"].get<std::string>()
        << ", K1 = " << t["K1"].get<std::string>() << " -> " << (t["matches"].get<bool>() ? "match" : "MISMATCH") << "\n";
    const auto& b = r["charge_bound"];
    out << "central charge exp(2 pi i " << r["central_charge"]["fraction"].get<std::string>() << "), order "
        << r["central_charge"]["order"] << "\n";
    out << "bound " << b["bound"].get<std::string>() << " (N = " << b["exponent"] << (b["doubled"].get<bool>() ? ", doubled" : "")
        << "): divides " << yes(b["divides"]) << ", attained " << yes(b["attained"]) << "\n";
    if (!r.contains("modular")) return;
    const auto& m = r["modular"];
    if (m.contains("skipped")) {
        out << "modular data skipped: " << m["skipped"].get<std::string>() << "\n";
        return;
    }
    out << "S:\n";
    for (const auto& row : m["S"]) out << "  [" << joined(row, ", ") << "]\n";
    out << "twists: " << joined(m["twists"]) << " (T order " << m["T_order"] << ")\n";
    out << "Gauss-sum charge exp(2 pi i " << m["central_charge"]["fraction"].get<std::string>() << "), order "
        << m["central_charge"]["order"] << "\n";
    for (const auto& [k, v] : m["checks"].items())
        out << "  " << k << ": " << (v.is_boolean() ? yes(v) : v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    out << "Verlinde field " << m["verlinde_field"].get<std::string>();
    if (m.contains("verlinde_prediction"))
        out << " (closed form " << m["verlinde_prediction"]["field"].get<std::string>() << ", "
            << (m["verlinde_prediction"]["matches"].get<bool>() ? "match" : "MISMATCH") << ")";
    out << "\n";
    out << "extracted fusion ring: " << (m["fusion_ring_valid"].get<bool>() ? "valid" : "INVALID");
    if (m.contains("fusion_ring_file")) out << ", written to " << m["fusion_ring_file"].get<std::string>();
    out << "\n";
    if (m.contains("fusion_ring")) out << m["fusion_ring"].dump() << "\n";
}

void table_K_text(const ordered_json& r, std::ostream& out) {
    auto column = [&](const char* key) {
        std::string s;
        for (const auto& row : r["rows"]) s += (s.empty() ? "" : " ") + row[key].dump();
        return s;
    };
    out << "N:           " << column("N") << "\n";
    out << "closed form: " << column("closed_form") << "\n";
    out << "oracle:      " << column("oracle") << "\n";
    out << "golden:      " << column("golden") << "\n";
    for (const auto& row : r["rows"])
        if (!row["match"].get<bool>())
            out << "diff N=" << row["N"] << ": closed form " << row["closed_form"] << ", oracle " << row["oracle"]
                << ", golden " << row["golden"] << "\n";
}

void table_A_text(const ordered_json& r, std::ostream& out) {
    int degree = 0;
    for (const auto& b : r["blocks"]) {
        if (b["degree"].get<int>() != degree) {
            degree = b["degree"].get<int>();
            out << "degree " << degree << "\n";
        }
        std::string name = b["name"].get<std::string>();
        if (name.rfind("F(", 0) == 0) name = b["key"].get<std::string>();  // table label reads better than the stabilizer
        out << "  " << name << ":";
        if (!b["families"].empty()) out << " " << joined(b["families"]);
        if (!b["categories"].empty()) out << " " << joined(b["categories"]);
        out << "\n";
    }
    out << "empty degrees: " << joined(r["empty_degrees"]) << "\n";
    for (const auto& d : r["diffs"]) {
        out << "diff " << d["field"].get<std::string>() << " (degree " << d["degree"] << "):";
        if (!d["computed_not_golden"].empty()) out << " computed only: " << joined(d["computed_not_golden"]) << ";";
        if (!d["golden_not_computed"].empty()) out << " golden only: " << joined(d["golden_not_computed"]) << ";";
        if (!d["families_computed_not_golden"].empty())
            out << " families computed only: " << joined(d["families_computed_not_golden"]) << ";";
        if (!d["families_golden_not_computed"].empty())
            out << " families golden only: " << joined(d["families_golden_not_computed"]) << ";";
        out << "\n";
    }
}

void table_B_text(const ordered_json& r, std::ostream& out) {
    out << r["cases"] << " categories with alcove size <= " << r["max_alcove"] << " (classical rank <= " << r["max_rank"]
        << ") in " << std::fixed << std::setprecision(1) << r["millis"].get<double>() / 1000 << " s\n";
    out.unsetf(std::ios::fixed);
    for (const auto& d : r["diffs"])
        out << "diff " << d["category"].get<std::string>() << " (" << d["source"].get<std::string>() << "): computed "
            << joined(d["computed"], " / ") << ", table " << joined(d["table"], " / ") << "\n";
    if (r["diffs"].empty()) out << "all rows verified\n";
}

void bound_text(const ordered_json& r, std::ostream& out) {
    if (r.contains("category")) out << r["category"].get<std::string>() << "\n";
    if (r.contains("K0")) out << "K0 = " << r["K0"]["name"].get<std::string>() << ", K1 = " << r["K1"]["name"].get<std::string>() << "\n";
    if (r.contains("exponent")) {
        out << "N = " << r["exponent"] << "\n";
        out << "f(2N) = " << r["f(2N)"].get<std::string>() << "\n";
        out << "f(2N)/3 = " << r["f(2N)/3"].get<std::string>() << "\n";
    } else {
        const auto& b = r["charge_bound"];
        out << "N = " << b["exponent"] << ", f(2N) = " << r["f(2N)"].get<std::string>() << "\n";
        out << "charge order bound " << b["bound"].get<std::string>() << (b["doubled"].get<bool>() ? " (doubled, K1 != K0)" : "")
            << "\n";
    }
    if (r.contains("central_charge"))
        out << "central charge exp(2 pi i " << r["central_charge"]["fraction"].get<std::string>() << "), order "
            << r["central_charge"]["order"] << ": divides " << yes(r["divides"]) << ", attained " << yes(r["attained"]) << "\n";
    out << "xi^16 = 1 criterion applies: " << yes(r["xi^16 = 1 applies"]) << "\n";
}

}  // namespace

void render(const RunConfig& cfg, const Result& r, std::ostream& out) {
    if (cfg.format == Format::structured) {
        ordered_json doc;
        doc["command"] = cfg.command;
        doc["status"] = r.status;
        doc["report"] = r.report;
        out << doc.dump(2) << "\n";
        return;
    }
    if (r.report.contains("error")) return;  // reported on stderr by the caller
    if (cfg.command == "validate") validate_text(r.report, out);
    else if (cfg.command == "analyze") analyze_text(r.report, out);
    else if (cfg.command == "quantum") quantum_text(r.report, out);
    else if (cfg.command == "bound") bound_text(r.report, out);
    else if (cfg.table == "figK") table_K_text(r.report, out);
    else if (cfg.table == "figA") table_A_text(r.report, out);
    else table_B_text(r.report, out);
}

}  // namespace fusionforge::cli
