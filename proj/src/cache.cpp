#include "mdzeta/cache.hpp"

#include <chrono>
#include <fstream>

#include "mdzeta/errors.hpp"

#include <json.hpp>

namespace mdzeta {

namespace fs = std::filesystem;

CacheStore::CacheStore(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) fail(Errc::IoError, "cannot create cache directory " + dir_.string());
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string now_iso8601() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

}  // namespace

fs::path CacheStore::record_path(const std::string& key) const {
  char name[24];
  std::snprintf(name, sizeof name, "%016llx", (unsigned long long)fnv1a(key));
  return dir_ / (std::string(name) + ".json");
}

std::string CacheStore::canonical_key(const std::string& domain, const std::string& symbol,
                                      const std::string& truncation) {
  auto squeeze = [](const std::string& in) {
    std::string out;
    for (char c : in)
      if (!std::isspace((unsigned char)c)) out += c;
    return out;
  };
  return squeeze(domain) + "|" + squeeze(symbol) + "|" + squeeze(truncation);
}

void CacheStore::write(const CacheRecord& record) const {
  nlohmann::ordered_json j{{"key", record.key},
                           {"value_re", record.value_re},
                           {"value_im", record.value_im},
                           {"tail", record.tail},
                           {"term_count", record.term_count},
                           {"created_at", record.created_at.empty() ? now_iso8601()
                                                                    : record.created_at}};
  fs::path final_path = record_path(record.key);
  fs::path tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail(Errc::IoError, "cannot write " + tmp.string());
    out << j.dump(2) << "\n";
  }
  std::error_code ec;
  fs::rename(tmp, final_path, ec);
  if (ec) fail(Errc::IoError, "cannot move cache record into place: " + final_path.string());
}

std::optional<CacheRecord> CacheStore::read(const std::string& key) const {
  fs::path p = record_path(key);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  CacheRecord r;
  r.key = j.value("key", "");
  if (r.key != key) return std::nullopt;  // hash collision or foreign file
  r.value_re = j.value("value_re", 0.0);
  r.value_im = j.value("value_im", 0.0);
  r.tail = j.value("tail", 0.0);
  r.term_count = j.value("term_count", (std::int64_t)0);
  r.created_at = j.value("created_at", "");
  return r;
}

std::vector<std::string> CacheStore::list() const {
  std::vector<std::string> keys;
  std::error_code ec;
  for (auto& entry : fs::directory_iterator(dir_, ec)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception&) {
      continue;
    }
    if (j.contains("key")) keys.push_back(j["key"]);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::size_t CacheStore::clear() const {
  std::size_t removed = 0;
  std::error_code ec;
  for (auto& entry : fs::directory_iterator(dir_, ec)) {
    if (entry.path().extension() != ".json") continue;
    if (fs::remove(entry.path(), ec)) ++removed;
  }
  return removed;
}

}  // namespace mdzeta
