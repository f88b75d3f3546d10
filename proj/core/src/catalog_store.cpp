#include "mhorn/catalog_store.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mhorn/errors.hpp"
#include "mhorn/io.hpp"

namespace mhorn {

CatalogStore::CatalogStore(std::optional<std::filesystem::path> cacheDir) : cacheDir_(std::move(cacheDir)) {}

std::filesystem::path CatalogStore::cacheFile(int n) const {
  if (!cacheDir_) return {};
  return *cacheDir_ / ("catalog-n" + std::to_string(n) + "-v" + std::to_string(kCatalogFormatVersion) + ".json");
}

namespace {

std::optional<TripleCatalog> readCached(const std::filesystem::path& file, int n) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    auto catalog = parseCatalog(buf.str());
    if (catalog.n != n) return std::nullopt;
    return catalog;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void writeCached(const std::filesystem::path& file, const TripleCatalog& catalog) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) return;
  // Write-then-rename so concurrent readers never see a partial file.
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << catalogToJson(catalog);
    if (!out) return;
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

std::shared_ptr<const TripleCatalog> CatalogStore::get(int n) {
  std::lock_guard lock(mutex_);
  if (auto it = cache_.find(n); it != cache_.end()) return it->second;

  std::optional<TripleCatalog> catalog;
  const bool useDisk = cacheDir_ && n >= kDiskCacheThreshold && n <= kMaxCatalogSize;
  if (useDisk) catalog = readCached(cacheFile(n), n);
  if (!catalog) {
    catalog = enumerateCatalog(n);
    if (useDisk) writeCached(cacheFile(n), *catalog);
  }
  auto shared = std::make_shared<const TripleCatalog>(std::move(*catalog));
  cache_.emplace(n, shared);
  return shared;
}

CatalogStore& CatalogStore::global() {
  static CatalogStore store([]() -> std::optional<std::filesystem::path> {
    if (const char* dir = std::getenv(kCatalogDirEnv); dir && *dir) return std::filesystem::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "mhorn";
    if (const char* home = std::getenv("HOME"); home && *home)
      return std::filesystem::path(home) / ".cache" / "mhorn";
    return std::nullopt;
  }());
  return store;
}

std::shared_ptr<const TripleCatalog> catalogFor(int n) { return CatalogStore::global().get(n); }

}  // namespace mhorn
