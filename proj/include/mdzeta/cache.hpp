#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mdzeta {

struct CacheRecord {
  std::string key;  // canonical (domain, symbol, truncation) text
  double value_re = 0.0;
  double value_im = 0.0;
  double tail = 0.0;
  std::int64_t term_count = 0;
  std::string created_at;
};

/// One JSON file per record under a cache directory; writes go through a
/// temp file and rename so concurrent readers never see partial records.
class CacheStore {
public:
  explicit CacheStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  void write(const CacheRecord& record) const;
  std::optional<CacheRecord> read(const std::string& key) const;
  std::vector<std::string> list() const;
  std::size_t clear() const;

  /// Order-normalized key: logically equal requests (whitespace variants,
  /// reordered flags) map to the same record.
  static std::string canonical_key(const std::string& domain, const std::string& symbol,
                                   const std::string& truncation);

private:
  std::filesystem::path record_path(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace mdzeta
