#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace hookcensus {

// Append-only JSON-lines value cache. One record per line:
//   {"fp": "<query fingerprint>", "perm": "<text>", "value": "<decimal>", "h": "<checksum>"}
// "h" is an FNV-1a checksum of fp|perm|value; a malformed line or checksum
// mismatch marks the whole file corrupt, and callers rebuild it.
class JsonlCache {
public:
  using Key = std::pair<std::string, std::string>;  // (fingerprint, perm)

  // nullopt = file exists but is corrupt; an absent file loads empty.
  static std::optional<JsonlCache> load(const std::string& path);

  std::optional<std::string> lookup(const std::string& fingerprint,
                                    const std::string& perm) const;
  void put(const std::string& fingerprint, const std::string& perm, const std::string& value);

  // Appends records added since load; rewrite() replaces the file with the
  // full current contents (used after corruption).
  void append_new(const std::string& path) const;
  void rewrite(const std::string& path) const;

  size_t size() const { return entries_.size(); }

  static std::string checksum(const std::string& fp, const std::string& perm,
                              const std::string& value);

private:
  std::map<Key, std::string> entries_;
  std::map<Key, std::string> fresh_;  // not yet on disk
};

}  // namespace hookcensus
