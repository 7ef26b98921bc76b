#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace gtsing {

/// Bump when the layout of cached values changes; older entries are then
/// treated as misses and rewritten.
inline constexpr int kCacheFormatVersion = 1;

/// Environment variable naming the cache directory when --cache is absent.
inline constexpr const char* kCacheDirEnv = "GTSING_CACHE_DIR";

struct CacheKey {
  int n = 0;
  std::string operation;  ///< "phi", "act", ...
  std::string arguments;  ///< canonical text of everything the result depends on

  nlohmann::json to_json() const;
  /// Hex SHA-256 of the key and the format version.
  std::string digest() const;
};

/// Content-addressed store: one JSON file per entry at
/// DIR/<first two hex digits>/<digest>.json, written to a temporary file
/// and renamed into place. Entries are deterministic, so concurrent
/// writers race harmlessly.
class Cache {
 public:
  /// A disabled cache: lookups miss, stores are dropped.
  Cache() = default;
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return dir_.has_value(); }
  std::filesystem::path entry_path(const CacheKey& key) const;

  /// The stored value, or nothing when absent, unreadable, from another
  /// format version, or stored under a different key.
  std::optional<nlohmann::json> load(const CacheKey& key) const;

  /// Returns false when the entry could not be written.
  bool store(const CacheKey& key, const nlohmann::json& value) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

/// --cache DIR if given, else $GTSING_CACHE_DIR if set and non-empty,
/// else $XDG_CACHE_HOME/gtsing or ~/.cache/gtsing; nothing if none apply.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace gtsing
