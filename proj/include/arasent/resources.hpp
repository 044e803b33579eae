#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace arasent {

// One word per line, '#' starts a comment. Duplicate lines are rejected with
// a diagnostic naming the line.
std::set<std::string> load_wordlist(const std::filesystem::path& path);

// Like load_wordlist but entries may contain internal spaces (phrases).
std::vector<std::string> load_phraselist(const std::filesystem::path& path);

// UTF-8 TSV, key TAB value, '#' comments. Later duplicate keys are rejected.
std::map<std::string, std::string> load_tsv_map(const std::filesystem::path& path);

// Reads a whole file; throws DataError if unreadable or not valid UTF-8.
std::string read_text_file(const std::filesystem::path& path);

// Writes via a temp file in the same directory plus rename, so partial runs
// never leave a truncated output behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Splits a line on TAB without any quoting rules.
std::vector<std::string> split_tsv_line(const std::string& line);

}  // namespace arasent
