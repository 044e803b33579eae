#include "arasent/frequency.hpp"

#include <fstream>

#include "arasent/errors.hpp"
#include "arasent/resources.hpp"
#include "arasent/utf8.hpp"

namespace arasent {

FrequencyTable FrequencyTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open lexicon: " + path.string());
  FrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!utf8::valid(line))
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": invalid UTF-8");
    const auto fields = split_tsv_line(line);
    if (fields.size() == 1) {
      table.add(fields[0], 1);
    } else if (fields.size() == 2) {
      std::uint64_t count = 0;
      try {
        count = std::stoull(fields[1]);
      } catch (const std::exception&) {
        throw DataError(path.string() + ":" + std::to_string(line_no) +
                        ": bad count \"" + fields[1] + "\"");
      }
      table.add(fields[0], count);
    } else {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected \"word\" or \"word<TAB>count\"");
    }
  }
  return table;
}

}  // namespace arasent
