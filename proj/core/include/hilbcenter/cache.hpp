#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "hilbcenter/json.hpp"

namespace hilbcenter {

/// 64-bit FNV-1a, used for the integrity checksum embedded in cache files.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

/// A directory of JSON documents with atomic replacement.  Writers dump to a
/// temporary file in the same directory and rename over the target, so a
/// crashed run never leaves a half-written cache entry behind.  Content
/// validation (format tag, checksum) is the responsibility of each document
/// type; a file that exists but cannot be parsed raises CacheError.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  /// Returns the parsed document, or nullopt when the file does not exist.
  std::optional<Json> load(const std::string& name) const;

  /// Atomically writes `doc` under `name`.  Throws CacheError when the
  /// directory cannot be created or the file cannot be written.
  void store(const std::string& name, const Json& doc) const;

  std::filesystem::path path_for(const std::string& name) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace hilbcenter
