#pragma once

#include <nlohmann/json.hpp>

namespace hilbcenter {

/// Insertion-ordered JSON.  Every document this project emits or caches uses
/// this type so serialization is byte-for-byte deterministic.
using Json = nlohmann::ordered_json;

}  // namespace hilbcenter
