#include "gtsing/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>

namespace gtsing {

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return v && *v ? v : nullptr;
}

}  // namespace

nlohmann::json CacheKey::to_json() const { return {{"n", n}, {"operation", operation}, {"arguments", arguments}}; }

std::string CacheKey::digest() const {
  nlohmann::json j = to_json();
  j["version"] = kCacheFormatVersion;
  return sha256_hex(j.dump());
}

std::filesystem::path Cache::entry_path(const CacheKey& key) const {
  std::string d = key.digest();
  return *dir_ / d.substr(0, 2) / (d + ".json");
}

std::optional<nlohmann::json> Cache::load(const CacheKey& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(entry_path(key));
  if (!in) return std::nullopt;
  nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("version", -1) != kCacheFormatVersion) return std::nullopt;
  if (!entry.contains("key") || entry["key"] != key.to_json() || !entry.contains("value")) return std::nullopt;
  return entry["value"];
}

bool Cache::store(const CacheKey& key, const nlohmann::json& value) const {
  if (!enabled()) return false;
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::path target = entry_path(key);
  std::filesystem::create_directories(target.parent_path(), ec);
  if (ec) return false;
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    nlohmann::json entry = {{"version", kCacheFormatVersion}, {"key", key.to_json()}, {"value", value}};
    out << entry.dump(1) << '\n';
    out.close();
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return false;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* d = env(kCacheDirEnv)) return std::filesystem::path(d);
  if (const char* x = env("XDG_CACHE_HOME")) return std::filesystem::path(x) / "gtsing";
  if (const char* h = env("HOME")) return std::filesystem::path(h) / ".cache" / "gtsing";
  return std::nullopt;
}

}  // namespace gtsing
