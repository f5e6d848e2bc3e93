#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hilbcenter/cache.hpp"
#include "hilbcenter/partition.hpp"

namespace hilbcenter {

/// Value of the irreducible symmetric-group character chi^lambda on the
/// conjugacy class of cycle type mu (|lambda| == |mu|).  Computed by the
/// Murnaghan-Nakayama border-strip recursion; always an exact integer.
Int mn_character(const Partition& lambda, const Partition& mu);

/// Full character table of S_n.  Rows are irreducibles, columns conjugacy
/// classes, both indexed by the canonical partition list of n.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> labels;          ///< canonical order
  std::vector<std::vector<Int>> values;   ///< values[row][col]

  std::size_t index_of(const Partition& p) const;
  const Int& value(const Partition& lambda, const Partition& mu) const;

  /// FNV-1a over the canonical serialization; stored inside cache files.
  std::string checksum() const;

  Json to_json() const;

  /// Parses and fully validates a cached table (format tag, canonical label
  /// list, integer entries, checksum).  Throws CacheError on any defect.
  static CharacterTable from_json(const Json& j);
};

/// Computes the table from scratch.  Accepts n == 0 (the 1x1 table [1]).
CharacterTable compute_character_table(int n);

/// Hands out character tables with two cache layers: process memory and an
/// optional disk directory ("chartable_<n>.json" files).  Thread safe.
class TableStore {
 public:
  /// Memory-only store.
  explicit TableStore(int max_n = 20);

  /// Store backed by `cache_dir`.  Pass use_disk = false to keep the
  /// directory configured but bypassed (the --no-cache path).
  TableStore(std::filesystem::path cache_dir, int max_n = 20,
             bool use_disk = true);

  /// Returns the table for S_n, computing and persisting on first use.
  /// Throws CapError when n exceeds the configured maximum and CacheError
  /// when a disk entry exists but is corrupt.
  const CharacterTable& get(int n);

  int max_n() const { return max_n_; }
  bool disk_enabled() const { return disk_.has_value() && use_disk_; }

  static std::string cache_name(int n);

 private:
  std::mutex mutex_;
  std::map<int, std::unique_ptr<CharacterTable>> memory_;
  std::optional<DiskCache> disk_;
  bool use_disk_ = false;
  int max_n_;
};

}  // namespace hilbcenter
