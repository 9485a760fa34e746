#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fusionforge/cyclotomic.hpp"
#include "fusionforge/fusion_ring.hpp"

namespace fusionforge {

// malformed input; what() carries line/column or the offending field
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"rank", "labels", "duality", "constants"}; constants i-major, k-minor.
// Labels default to b0, b1, ... and duality to the identity when absent.
FusionRing parse_fusion_ring(std::string_view text);
FusionRing read_fusion_ring(const std::filesystem::path& path);
// canonical key order, one trailing newline
std::string dump_fusion_ring(const FusionRing& r);
void write_fusion_ring(const std::filesystem::path& path, const FusionRing& r);

nlohmann::ordered_json to_json(const CycElem& x);
CycElem cyc_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const SubfieldHandle& f);
SubfieldHandle field_from_json(const nlohmann::json& j);

}  // namespace fusionforge
