#include "fusionforge/fusion_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace fusionforge {

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw FormatError("field '" + field + "': " + what);
}

std::vector<int> int_array(const nlohmann::json& j, const std::string& field, bool nonnegative) {
    if (!j.is_array()) field_error(field, "expected an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& v = j[i];
        if (!v.is_number_integer()) field_error(field, "entry " + std::to_string(i) + " is not an integer");
        auto x = v.get<long long>();
        if (nonnegative && x < 0) field_error(field, "entry " + std::to_string(i) + " is negative");
        if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min())
            field_error(field, "entry " + std::to_string(i) + " out of range");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

}  // namespace

FusionRing parse_fusion_ring(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // keep the parser's reason, drop its own position prefix
        std::string reason = e.what();
        if (auto at = reason.find("column"); at != std::string::npos && reason.find(": ", at) != std::string::npos)
            reason = reason.substr(reason.find(": ", at) + 2);
        throw FormatError("parse error at " + line_column(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + reason);
    }
    if (!j.is_object()) throw FormatError("top level must be an object");
    if (!j.contains("rank")) field_error("rank", "missing");
    if (!j["rank"].is_number_integer() || j["rank"].get<long long>() < 1) field_error("rank", "expected a positive integer");
    long long r = j["rank"].get<long long>();
    if (r > 4096) field_error("rank", "too large");

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const auto& l = j["labels"];
        if (!l.is_array()) field_error("labels", "expected an array of strings");
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (!l[i].is_string()) field_error("labels", "entry " + std::to_string(i) + " is not a string");
            labels.push_back(l[i].get<std::string>());
        }
        if (static_cast<long long>(labels.size()) != r)
            field_error("labels", "has " + std::to_string(labels.size()) + " entries, rank is " + std::to_string(r));
    } else {
        for (long long i = 0; i < r; ++i) labels.push_back("b" + std::to_string(i));
    }

    std::vector<int> duality;
    if (j.contains("duality")) {
        duality = int_array(j["duality"], "duality", true);
        if (static_cast<long long>(duality.size()) != r)
            field_error("duality", "has " + std::to_string(duality.size()) + " entries, rank is " + std::to_string(r));
        for (std::size_t i = 0; i < duality.size(); ++i)
            if (duality[i] >= r) field_error("duality", "entry " + std::to_string(i) + " is not a basis index");
    } else {
        for (long long i = 0; i < r; ++i) duality.push_back(static_cast<int>(i));
    }

    if (!j.contains("constants")) field_error("constants", "missing");
    std::vector<int> c = int_array(j["constants"], "constants", true);
    if (static_cast<long long>(c.size()) != r * r * r)
        field_error("constants", "has " + std::to_string(c.size()) + " entries, expected rank^3 = " + std::to_string(r * r * r));
    for (const auto& [key, value] : j.items())
        if (key != "rank" && key != "labels" && key != "duality" && key != "constants") field_error(key, "unknown field");
    return FusionRing(std::move(labels), std::move(duality), std::move(c));
}

FusionRing read_fusion_ring(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_fusion_ring(ss.str());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string dump_fusion_ring(const FusionRing& r) {
    nlohmann::ordered_json j;
    j["rank"] = r.rank();
    j["labels"] = r.labels();
    j["duality"] = r.duality();
    j["constants"] = r.constants();
    return j.dump() + "\n";
}

void write_fusion_ring(const std::filesystem::path& path, const FusionRing& r) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << dump_fusion_ring(r);
}

nlohmann::ordered_json to_json(const CycElem& x) {
    nlohmann::ordered_json j;
    j["conductor"] = x.conductor();
    auto coeffs = x.coeffs();
    std::vector<std::string> cs;
    for (const auto& c : coeffs) cs.push_back(c.get_str());
    j["coefficients"] = cs;
    return j;
}

CycElem cyc_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coefficients"))
        throw FormatError("cyclotomic element needs 'conductor' and 'coefficients'");
    if (!j["conductor"].is_number_unsigned() || j["conductor"].get<u64>() == 0)
        field_error("conductor", "expected a positive integer");
    u64 n = j["conductor"].get<u64>();
    const auto& cs = j["coefficients"];
    if (!cs.is_array() || cs.size() != euler_phi(n))
        field_error("coefficients", "expected " + std::to_string(euler_phi(n)) + " rationals");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_string()) field_error("coefficients", "entry " + std::to_string(i) + " is not a string");
        Rational q;
        if (q.set_str(cs[i].get<std::string>(), 10) != 0 || q.get_den() == 0)
            field_error("coefficients", "entry " + std::to_string(i) + " is not a rational");
        q.canonicalize();
        c.push_back(q);
    }
    return CycElem::from_coeffs(n, c);
}

nlohmann::ordered_json to_json(const SubfieldHandle& f) {
    nlohmann::ordered_json j;
    j["conductor"] = f.conductor;
    j["stabilizer"] = f.stabilizer;
    return j;
}

SubfieldHandle field_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("stabilizer"))
        throw FormatError("field needs 'conductor' and 'stabilizer'");
    if (!j["conductor"].is_number_unsigned() || j["conductor"].get<u64>() == 0)
        field_error("conductor", "expected a positive integer");
    u64 n = j["conductor"].get<u64>();
    std::vector<u64> h;
    for (const auto& v : j["stabilizer"]) {
        if (!v.is_number_unsigned() || gcd_u(v.get<u64>(), n) != 1) field_error("stabilizer", "entries must be units mod conductor");
        h.push_back(v.get<u64>() % n);
    }
    // close under multiplication so the handle is always a subgroup
    std::vector<char> in(n, 0);
    std::vector<u64> group{1 % n};
    in[1 % n] = 1;
    for (std::size_t i = 0; i < group.size(); ++i)
        for (u64 g : h) {
            u64 v = group[i] * g % n;
            if (!in[v]) {
                in[v] = 1;
                group.push_back(v);
            }
        }
    return subfield_from_stabilizer(n, group);
}

}  // namespace fusionforge
