#pragma once

namespace fusionforge::golden {

extern const char* const figA_json;
extern const char* const figK_json;

}  // namespace fusionforge::golden
