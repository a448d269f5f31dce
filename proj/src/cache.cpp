#include "hookcensus/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hookcensus {

std::string JsonlCache::checksum(const std::string& fp, const std::string& perm,
                                 const std::string& value) {
  uint64_t h = 14695981039346656037ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= '|';
    h *= 1099511628211ull;
  };
  mix(fp);
  mix(perm);
  mix(value);
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<JsonlCache> JsonlCache::load(const std::string& path) {
  JsonlCache cache;
  std::ifstream in(path);
  if (!in) return cache;  // nothing cached yet
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("fp") || !j.contains("perm") ||
        !j.contains("value") || !j.contains("h")) {
      return std::nullopt;
    }
    std::string fp = j["fp"], perm = j["perm"], value = j["value"], h = j["h"];
    if (h != checksum(fp, perm, value)) return std::nullopt;
    cache.entries_[{fp, perm}] = value;
  }
  return cache;
}

std::optional<std::string> JsonlCache::lookup(const std::string& fingerprint,
                                              const std::string& perm) const {
  auto it = entries_.find({fingerprint, perm});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void JsonlCache::put(const std::string& fingerprint, const std::string& perm,
                     const std::string& value) {
  Key key{fingerprint, perm};
  if (entries_.emplace(key, value).second) fresh_.emplace(key, value);
}

namespace {

void write_records(std::ofstream& out, const std::map<JsonlCache::Key, std::string>& records) {
  for (const auto& [key, value] : records) {
    nlohmann::json j;
    j["fp"] = key.first;
    j["perm"] = key.second;
    j["value"] = value;
    j["h"] = JsonlCache::checksum(key.first, key.second, value);
    out << j.dump() << "\n";
  }
}

}  // namespace

void JsonlCache::append_new(const std::string& path) const {
  if (fresh_.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file for append: " + path);
  write_records(out, fresh_);
}

void JsonlCache::rewrite(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open cache file for rewrite: " + path);
  write_records(out, entries_);
}

}  // namespace hookcensus
