#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fsig/cli/report.hpp"

namespace fsig::cli {

// On-disk store of report payloads keyed by (ring fingerprint, command,
// parameters). Entries record the tool and cache versions; a mismatch is a
// miss. Unreadable or corrupt entries are misses too.
class ReportCache {
 public:
  ReportCache() = default;
  explicit ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  // Directory from FSIG_CACHE_DIR; inactive when unset, empty or `enabled` is false.
  static ReportCache from_environment(bool enabled);

  bool active() const noexcept { return !dir_.empty(); }
  static std::string key(const std::string& fingerprint, const Report& request);

  std::optional<Report> load(const std::string& key, const Report& request) const;
  void store(const std::string& key, const Report& report) const;

 private:
  std::filesystem::path entry_path(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace fsig::cli
