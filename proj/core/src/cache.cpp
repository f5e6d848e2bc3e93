#include "hilbcenter/cache.hpp"

#include <fstream>
#include <system_error>

#include "hilbcenter/errors.hpp"

namespace hilbcenter {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  static const char digits[] = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path DiskCache::path_for(const std::string& name) const {
  return dir_ / name;
}

std::optional<Json> DiskCache::load(const std::string& name) const {
  std::filesystem::path file = path_for(name);
  std::error_code ec;
  if (!std::filesystem::exists(file, ec)) return std::nullopt;
  std::ifstream in(file);
  if (!in)
    throw CacheError("cache file exists but cannot be read: " + file.string());
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw CacheError("cache file is not valid JSON: " + file.string() + " (" +
                     e.what() + ")");
  }
  return doc;
}

void DiskCache::store(const std::string& name, const Json& doc) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec)
    throw CacheError("cannot create cache directory " + dir_.string() + ": " +
                     ec.message());
  std::filesystem::path target = path_for(name);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file " + tmp.string());
    out << doc.dump(2) << '\n';
    if (!out) throw CacheError("short write to cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CacheError("cannot move cache file into place: " + target.string());
  }
}

}  // namespace hilbcenter
