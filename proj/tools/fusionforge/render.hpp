#pragma once

#include <ostream>
#include <string>

#include "fusionforge/commands.hpp"

namespace fusionforge::cli {

// structured: the report as indented JSON; text: a human summary of it
void render(const RunConfig& cfg, const Result& r, std::ostream& out);

}  // namespace fusionforge::cli
