#include "arasent/resources.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "arasent/errors.hpp"
#include "arasent/utf8.hpp"

namespace arasent {

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

void trim(std::string& line) {
  const auto first = line.find_first_not_of(" \t");
  if (first == std::string::npos) {
    line.clear();
    return;
  }
  line.erase(0, first);
  line.erase(line.find_last_not_of(" \t") + 1);
}

}  // namespace

std::set<std::string> load_wordlist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open word list: " + path.string());
  std::set<std::string> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!utf8::valid(line))
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": invalid UTF-8");
    if (line.find_first_of(" \t") != std::string::npos)
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": word contains whitespace: \"" + line + "\"");
    if (!words.insert(line).second)
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": duplicate entry \"" + line + "\"");
  }
  return words;
}

std::vector<std::string> load_phraselist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open phrase list: " + path.string());
  std::vector<std::string> phrases;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    if (!utf8::valid(line))
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": invalid UTF-8");
    if (!seen.insert(line).second)
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": duplicate entry \"" + line + "\"");
    phrases.push_back(line);
  }
  return phrases;
}

std::map<std::string, std::string> load_tsv_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open TSV map: " + path.string());
  std::map<std::string, std::string> map;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    if (!utf8::valid(line))
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": invalid UTF-8");
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected \"key<TAB>value\"");
    std::string key = line.substr(0, tab);
    std::string value = line.substr(tab + 1);
    if (!map.emplace(std::move(key), std::move(value)).second)
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": duplicate key \"" + line.substr(0, tab) + "\"");
  }
  return map;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  if (!utf8::valid(content)) throw DataError("file is not valid UTF-8: " + path.string());
  return content;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write file: " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw DataError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw DataError("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                    ec.message());
  }
}

std::vector<std::string> split_tsv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

}  // namespace arasent
