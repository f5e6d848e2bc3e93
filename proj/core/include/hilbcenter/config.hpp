#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "hilbcenter/json.hpp"

namespace hilbcenter {

enum class OutputFormat { Text, JsonDoc, Csv };

/// Run-wide knobs, resolved from defaults, environment, then flags (flags
/// win).  The resolved configuration is echoed into every JSON report so a
/// result document records how it was produced.
struct RunConfig {
  std::filesystem::path cache_dir;  ///< HILBCENTER_CACHE_DIR overrides default
  bool use_cache = true;
  std::filesystem::path data_dir;   ///< HILBCENTER_DATA_DIR overrides default
  int max_n = 20;                   ///< cap for character tables and Z_n work
  std::uint64_t permutation_group_cap = 100000;  ///< max elements enumerated
  std::uint64_t matrix_group_cap = 10000;
  std::uint64_t subadditivity_cap = 2000;  ///< exhaustive-pair-check threshold
  std::uint64_t seed = 0;                  ///< for sampled checks only
  int jobs = 1;
  OutputFormat format = OutputFormat::Text;

  /// Defaults with environment applied.  `compiled_data_dir` is the fallback
  /// data directory baked in at build time.
  static RunConfig resolve(const std::string& compiled_data_dir = "");

  std::filesystem::path reference_betti_file() const;

  Json echo() const;
};

}  // namespace hilbcenter
