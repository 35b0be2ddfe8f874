#include "fsig/cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace fsig::cli {

ReportCache ReportCache::from_environment(bool enabled) {
  if (!enabled) return {};
  const char* dir = std::getenv("FSIG_CACHE_DIR");
  if (!dir || !*dir) return {};
  return ReportCache(dir);
}

std::string ReportCache::key(const std::string& fingerprint, const Report& request) {
  Json k = Json::object();
  k["fingerprint"] = fingerprint;
  k["command"] = request.command;
  k["parameters"] = request.parameters;
  return k.dump();
}

std::filesystem::path ReportCache::entry_path(const std::string& key) const {
  return dir_ / (fnv1a_hex(key) + ".json");
}

std::optional<Report> ReportCache::load(const std::string& key, const Report& request) const {
  if (!active()) return std::nullopt;
  std::ifstream in(entry_path(key));
  if (!in) return std::nullopt;
  Json entry = Json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("cache_version", -1) != kCacheVersion) return std::nullopt;
  if (entry.value("tool_version", std::string()) != kToolVersion) return std::nullopt;
  if (entry.value("key", std::string()) != key) return std::nullopt;
  if (!entry.contains("parameters") || !entry.contains("rows") || !entry.contains("estimates") || !entry.contains("error_bounds")) return std::nullopt;
  Report out = request;
  out.parameters = entry["parameters"];
  out.rows = entry["rows"];
  out.estimates = entry["estimates"];
  out.error_bounds = entry["error_bounds"];
  return out;
}

void ReportCache::store(const std::string& key, const Report& report) const {
  if (!active()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  Json entry = Json::object();
  entry["cache_version"] = kCacheVersion;
  entry["tool_version"] = kToolVersion;
  entry["key"] = key;
  entry["parameters"] = report.parameters;
  entry["rows"] = report.rows;
  entry["estimates"] = report.estimates;
  entry["error_bounds"] = report.error_bounds;
  auto path = entry_path(key);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << entry.dump();
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace fsig::cli
