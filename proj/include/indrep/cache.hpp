#pragma once

// Optional on-disk JSON cache: one file `<kind>-<param>.json` per entry.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

namespace indrep {

class DiskCache {
 public:
  static constexpr int kFormatVersion = 1;
  static constexpr const char* kEnvVar = "INDREP_CACHE_DIR";

  DiskCache() = default;
  explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Uses `dir` when non-empty, otherwise $INDREP_CACHE_DIR, otherwise disabled.
  static DiskCache from_flag_or_env(const std::string& dir) {
    if (!dir.empty()) return DiskCache(dir);
    if (const char* env = std::getenv(kEnvVar); env && *env) return DiskCache(env);
    return {};
  }

  bool enabled() const noexcept { return !dir_.empty(); }

  std::optional<nlohmann::json> load(const std::string& kind, const std::string& param) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path(kind, param));
    if (!in) return std::nullopt;
    try {
      nlohmann::json j = nlohmann::json::parse(in);
      if (j.value("format_version", 0) != kFormatVersion || j.value("kind", "") != kind ||
          j.value("param", "") != param)
        return std::nullopt;
      return j.at("data");
    } catch (const nlohmann::json::exception&) {
      return std::nullopt;  // unreadable entries are treated as misses
    }
  }

  void store(const std::string& kind, const std::string& param, const nlohmann::json& data) const {
    if (!enabled()) return;
    std::filesystem::create_directories(dir_);
    nlohmann::json j = {
        {"format_version", kFormatVersion}, {"kind", kind}, {"param", param}, {"data", data}};
    auto target = path(kind, param);
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, target);
  }

  std::filesystem::path path(const std::string& kind, const std::string& param) const {
    std::string safe = param;
    for (char& c : safe)
      if (c == '/') c = '_';
    return dir_ / (kind + "-" + safe + ".json");
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace indrep
