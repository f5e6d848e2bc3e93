#include "hilbcenter/config.hpp"

#include <cstdlib>

namespace hilbcenter {

namespace {

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return (v && *v) ? v : nullptr;
}

std::filesystem::path default_cache_dir() {
  if (const char* d = env("HILBCENTER_CACHE_DIR")) return d;
  if (const char* xdg = env("XDG_CACHE_HOME"))
    return std::filesystem::path(xdg) / "hilbcenter";
  if (const char* home = env("HOME"))
    return std::filesystem::path(home) / ".cache" / "hilbcenter";
  return std::filesystem::temp_directory_path() / "hilbcenter-cache";
}

}  // namespace

RunConfig RunConfig::resolve(const std::string& compiled_data_dir) {
  RunConfig c;
  c.cache_dir = default_cache_dir();
  if (const char* d = env("HILBCENTER_DATA_DIR"))
    c.data_dir = d;
  else
    c.data_dir = compiled_data_dir;
  return c;
}

std::filesystem::path RunConfig::reference_betti_file() const {
  return data_dir / "reference_betti.json";
}

Json RunConfig::echo() const {
  Json j;
  j["cache_dir"] = cache_dir.string();
  j["use_cache"] = use_cache;
  j["data_dir"] = data_dir.string();
  j["max_n"] = max_n;
  j["permutation_group_cap"] = permutation_group_cap;
  j["matrix_group_cap"] = matrix_group_cap;
  j["subadditivity_cap"] = subadditivity_cap;
  j["seed"] = seed;
  j["jobs"] = jobs;
  switch (format) {
    case OutputFormat::Text:
      j["format"] = "text";
      break;
    case OutputFormat::JsonDoc:
      j["format"] = "json";
      break;
    case OutputFormat::Csv:
      j["format"] = "csv";
      break;
  }
  return j;
}

}  // namespace hilbcenter
