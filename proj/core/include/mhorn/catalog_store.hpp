#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "mhorn/combinatorics.hpp"

namespace mhorn {

/// Version tag written into catalog files; bump when the triple convention changes.
inline constexpr int kCatalogFormatVersion = 1;

/// Catalogs from this size upward are cached on disk.
inline constexpr int kDiskCacheThreshold = 6;

/// Environment variable naming the catalog cache directory.
inline constexpr const char* kCatalogDirEnv = "MHORN_CATALOG_DIR";

/// Memoizing source of Horn triple catalogs.
///
/// Catalogs for n >= kDiskCacheThreshold are read from and written to
/// `<dir>/catalog-n<n>-v<version>.json` when a cache directory is configured.
/// Unreadable or mismatching cache files are ignored and regenerated.
class CatalogStore {
 public:
  explicit CatalogStore(std::optional<std::filesystem::path> cacheDir = std::nullopt);

  std::shared_ptr<const TripleCatalog> get(int n);

  const std::optional<std::filesystem::path>& cacheDir() const { return cacheDir_; }
  std::filesystem::path cacheFile(int n) const;

  /// Store configured from MHORN_CATALOG_DIR, or $XDG_CACHE_HOME/mhorn, or $HOME/.cache/mhorn.
  static CatalogStore& global();

 private:
  std::optional<std::filesystem::path> cacheDir_;
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const TripleCatalog>> cache_;
};

/// Shorthand for CatalogStore::global().get(n).
std::shared_ptr<const TripleCatalog> catalogFor(int n);

}  // namespace mhorn
