#include "arasent/translit.hpp"

#include <algorithm>
#include <fstream>

#include "arasent/errors.hpp"
#include "arasent/resources.hpp"
#include "arasent/textkit.hpp"
#include "arasent/utf8.hpp"

namespace arasent {

namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::size_t cp_length(const std::string& s) { return utf8::decode(s).size(); }

}  // namespace

void TranslitRules::add(const std::string& latin,
                        const std::vector<std::string>& alternatives) {
  if (latin.empty()) throw DataError("transliteration rule with empty Latin sequence");
  if (alternatives.empty())
    throw DataError("transliteration rule for \"" + latin + "\" has no alternatives");
  rules.push_back({ascii_lower(latin), alternatives});
}

void TranslitRules::sort_rules() {
  std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
    if (a.latin.size() != b.latin.size()) return a.latin.size() > b.latin.size();
    return a.latin < b.latin;
  });
}

TranslitRules TranslitRules::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open transliteration rules: " + path.string());
  TranslitRules out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!utf8::valid(line))
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": invalid UTF-8");
    const auto fields = split_tsv_line(line);
    if (fields.size() != 3 || fields[0] != "seq")
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected \"seq<TAB><latin><TAB><alternatives>\"");
    std::vector<std::string> alternatives;
    std::string alt;
    for (char c : fields[2]) {
      if (c == '|') {
        alternatives.push_back(alt);
        alt.clear();
      } else {
        alt.push_back(c);
      }
    }
    alternatives.push_back(alt);
    try {
      out.add(fields[1], alternatives);
    } catch (const DataError& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  out.sort_rules();
  return out;
}

std::vector<std::string> franco_candidates(const std::string& latin_word,
                                           const TranslitRules& rules, std::size_t limit) {
  const std::string lower = ascii_lower(latin_word);

  std::vector<std::string> partial = {""};
  std::size_t i = 0;
  while (i < lower.size()) {
    // rules are sorted longest-first, so the first match is the longest one
    const TranslitRules::Rule* match = nullptr;
    for (const auto& rule : rules.rules) {
      if (lower.compare(i, rule.latin.size(), rule.latin) == 0) {
        match = &rule;
        break;
      }
    }
    if (!match) return {};  // unmapped letter: the word needs manual review

    std::vector<std::string> next;
    next.reserve(partial.size() * match->arabic_alternatives.size());
    for (const std::string& p : partial) {
      for (const std::string& alt : match->arabic_alternatives) {
        if (next.size() >= limit) break;
        next.push_back(p + alt);
      }
    }
    partial = std::move(next);
    i += match->latin.size();
  }

  std::sort(partial.begin(), partial.end());
  partial.erase(std::unique(partial.begin(), partial.end()), partial.end());
  std::erase(partial, std::string());  // all-elided branches produce nothing usable
  return partial;
}

namespace {

std::string pick_best_candidate(std::vector<std::string> candidates,
                                const FrequencyTable& lexicon) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const std::string& a, const std::string& b) {
                     const auto ca = lexicon.count(a), cb = lexicon.count(b);
                     if (ca != cb) return ca > cb;
                     const auto la = cp_length(a), lb = cp_length(b);
                     if (la != lb) return la < lb;
                     return a < b;
                   });
  return candidates.front();
}

bool is_latin_run_cp(char32_t cp) {
  return is_latin_letter(cp) || (cp >= U'0' && cp <= U'9');
}

bool is_space_like(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f';
}

bool has_url_prefix(const utf8::Decoded& d, std::size_t pos, std::u32string_view prefix) {
  if (pos + prefix.size() > d.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), d.cps.begin() + pos);
}

bool url_starts_at(const utf8::Decoded& d, std::size_t pos) {
  return has_url_prefix(d, pos, U"http://") || has_url_prefix(d, pos, U"https://") ||
         has_url_prefix(d, pos, U"www.");
}

}  // namespace

TranslitResult transliterate_franco(const std::string& text, const TranslitRules& rules,
                                    const FrequencyTable& lexicon,
                                    const std::map<std::string, std::string>& overrides) {
  TranslitResult result;
  const utf8::Decoded d = utf8::decode(text);
  const auto slice = [&](std::size_t a, std::size_t b) {
    return std::string(text.substr(d.offsets[a], d.offsets[b] - d.offsets[a]));
  };

  std::size_t i = 0;
  const std::size_t n = d.size();
  while (i < n) {
    // URLs are copied through whole, never read as Franco-Arab words
    if (url_starts_at(d, i)) {
      std::size_t j = i;
      while (j < n && !is_space_like(d.cps[j])) ++j;
      result.text += slice(i, j);
      i = j;
      continue;
    }
    if (!is_latin_run_cp(d.cps[i])) {
      result.text += slice(i, i + 1);
      ++i;
      continue;
    }
    std::size_t j = i;
    bool has_letter = false;
    while (j < n && is_latin_run_cp(d.cps[j])) {
      if (is_latin_letter(d.cps[j])) has_letter = true;
      ++j;
    }
    const std::string word = slice(i, j);
    i = j;
    if (!has_letter) {  // plain number, nothing to rewrite
      result.text += word;
      continue;
    }

    const std::string key = ascii_lower(word);
    if (const auto it = overrides.find(key); it != overrides.end()) {
      result.text += it->second;
      continue;
    }
    std::vector<std::string> candidates = franco_candidates(word, rules);
    if (candidates.empty()) {
      result.text += word;
      result.unresolved.push_back(word);
      continue;
    }
    result.text += pick_best_candidate(std::move(candidates), lexicon);
  }
  return result;
}

}  // namespace arasent
