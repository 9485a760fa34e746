#include <iostream>

#include <CLI11.hpp>

#include "fusionforge/commands.hpp"
#include "fusionforge/render.hpp"

using namespace fusionforge::cli;

namespace {

void add_category_args(CLI::App* cmd, std::string& type, RunConfig& cfg) {
    cmd->add_option("type", type, "Lie type letter A-G")->required()->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
    cmd->add_option("rank", cfg.rank, "rank")->required()->check(CLI::PositiveNumber);
    cmd->add_option("level", cfg.level, "level k")->required()->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fusionforge: exact fusion rings and quantum-group modular data"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text";
    std::string type;
    std::vector<std::string> quantum_triple;

    app.add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(64L, 1L << 20));
    app.add_option("--conductor-bound", cfg.conductor_bound, "largest conductor tried when embedding a ring");
    app.add_option("--weyl-cap", cfg.weyl_cap, "largest rank whose Weyl group is enumerated");
    app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    auto* validate = app.add_subcommand("validate", "check the fusion ring axioms");
    validate->add_option("path", cfg.path, "fusion-ring file")->required();

    auto* analyze = app.add_subcommand("analyze", "dimensions, fields and gradings of a fusion ring");
    analyze->add_option("path", cfg.path, "fusion-ring file")->required();

    auto* quantum = app.add_subcommand("quantum", "dimension fields and central charge of C(g, k)");
    add_category_args(quantum, type, cfg);
    quantum->add_flag("--modular", cfg.modular, "also compute S, T, Verlinde fields and the fusion ring");
    quantum->add_option("--ring-out", cfg.ring_out, "write the extracted fusion ring here");

    auto* tables = app.add_subcommand("tables", "regenerate a reference table and diff it");
    tables->add_option("which", cfg.table, "figA, figB or figK")->required()->check(CLI::IsMember({"figA", "figB", "figK"}));
    tables->add_option("--max-alcove", cfg.max_alcove, "figB: largest alcove swept");
    tables->add_option("--max-rank", cfg.max_rank, "figB: largest classical rank swept");

    auto* bound = app.add_subcommand("bound", "order bounds for the central charge");
    auto* exp_opt = bound->add_option("--exponent", cfg.exponent, "exponent N of Gal(K0/Q)")->check(CLI::PositiveNumber);
    auto* ring_opt = bound->add_option("--ring", cfg.path, "fusion-ring file");
    auto* q_opt = bound->add_option("--quantum", quantum_triple, "type rank level")->expected(3);
    exp_opt->excludes(ring_opt)->excludes(q_opt);
    ring_opt->excludes(q_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "structured" ? Format::structured : Format::text;
    if (!type.empty()) cfg.type_letter = type[0];
    if (!quantum_triple.empty()) {
        try {
            if (quantum_triple[0].size() != 1) throw std::invalid_argument("type must be one letter");
            cfg.type_letter = quantum_triple[0][0];
            cfg.rank = std::stoi(quantum_triple[1]);
            cfg.level = std::stoi(quantum_triple[2]);
        } catch (const std::exception&) {
            std::cerr << "error: --quantum expects TYPE RANK LEVEL\n";
            return exit_input;
        }
    }

    Result r = run(cfg);
    render(cfg, r, std::cout);
    if (r.report.contains("error") && cfg.format == Format::text)
        std::cerr << "error: " << r.report["error"].get<std::string>() << "\n";
    return r.status;
}
