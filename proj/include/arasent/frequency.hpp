#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace arasent {

// word -> occurrence count. Counts form a commutative monoid under merge, so
// tables may be built per corpus shard and combined.
struct FrequencyTable {
  std::map<std::string, std::uint64_t> entries;
  std::uint64_t total_tokens = 0;

  void add(const std::string& word, std::uint64_t n = 1) {
    if (n == 0) return;
    entries[word] += n;
    total_tokens += n;
  }

  void merge(const FrequencyTable& other) {
    for (const auto& [word, count] : other.entries) entries[word] += count;
    total_tokens += other.total_tokens;
  }

  std::uint64_t count(const std::string& word) const {
    const auto it = entries.find(word);
    return it == entries.end() ? 0 : it->second;
  }

  // "word<TAB>count" lines; plain one-word-per-line files load with count 1.
  static FrequencyTable load(const std::filesystem::path& path);
};

}  // namespace arasent
