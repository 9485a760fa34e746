#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fusionforge/numtheory.hpp"

namespace fusionforge::cli {

enum class Format { text, structured };

enum ExitCode { exit_ok = 0, exit_diff = 1, exit_input = 2 };

struct RunConfig {
    std::string command;  // validate, analyze, quantum, tables, bound
    std::string path;
    char type_letter = 0;
    int rank = 0;
    int level = 0;
    long precision = 128;
    u64 conductor_bound = 2000;
    int weyl_cap = 4;
    Format format = Format::text;

    bool modular = false;
    std::string ring_out;  // quantum --modular: where to write the extracted ring

    std::string table;  // figA, figB, figK
    u64 max_alcove = 2000;
    int max_rank = 12;

    std::optional<u64> exponent;  // bound --exponent
};

struct Result {
    int status = exit_ok;
    nlohmann::ordered_json report;
};

Result cmd_validate(const RunConfig& cfg);
Result cmd_analyze(const RunConfig& cfg);
Result cmd_quantum(const RunConfig& cfg);
Result cmd_tables(const RunConfig& cfg);
Result cmd_bound(const RunConfig& cfg);

// dispatches on cfg.command; bad input becomes exit_input with an "error" entry
Result run(const RunConfig& cfg);

}  // namespace fusionforge::cli
