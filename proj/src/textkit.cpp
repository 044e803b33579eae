#include "arasent/textkit.hpp"

#include <algorithm>
#include <fstream>

#include "arasent/errors.hpp"
#include "arasent/utf8.hpp"

namespace arasent {

std::string_view to_string(TokenKind k) {
  switch (k) {
    case TokenKind::word: return "word";
    case TokenKind::emoticon: return "emoticon";
    case TokenKind::punctuation: return "punctuation";
    case TokenKind::number: return "number";
    case TokenKind::mention: return "mention";
    case TokenKind::url: return "url";
    case TokenKind::hashtag: return "hashtag";
  }
  return "word";
}

TokenKind token_kind_from_string(std::string_view s) {
  if (s == "word") return TokenKind::word;
  if (s == "emoticon") return TokenKind::emoticon;
  if (s == "punctuation") return TokenKind::punctuation;
  if (s == "number") return TokenKind::number;
  if (s == "mention") return TokenKind::mention;
  if (s == "url") return TokenKind::url;
  if (s == "hashtag") return TokenKind::hashtag;
  throw DataError("unknown token kind: " + std::string(s));
}

const VariantTable& VariantTable::standard() {
  static const VariantTable table = [] {
    VariantTable t;
    t.groups = {{U"آأإا", U'ا'},   // آ أ إ ا -> ا
                {U"ىي", U'ي'},               // ى ي -> ي
                {U"ةه", U'ة'}};              // ة ه -> ة
    return t;
  }();
  return table;
}

const VariantTable::Group* VariantTable::group_of(char32_t cp) const {
  for (const auto& g : groups)
    if (g.members.find(cp) != std::u32string::npos) return &g;
  return nullptr;
}

char32_t VariantTable::canonical(char32_t cp) const {
  const Group* g = group_of(cp);
  return g ? g->canonical : cp;
}

void VariantTable::validate() const {
  std::set<char32_t> seen;
  for (const auto& g : groups) {
    if (g.members.find(g.canonical) == std::u32string::npos)
      throw DataError("variant group does not contain its canonical letter");
    for (char32_t cp : g.members)
      if (!seen.insert(cp).second)
        throw DataError("variant groups are not pairwise disjoint");
  }
}

namespace {

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case 0x00A0:  // no-break space
    case 0x200B:  // zero width space
    case 0x200C:
    case 0x200D:
    case 0xFEFF:
      return true;
    default:
      return (cp >= 0x2000 && cp <= 0x200A) || cp == 0x3000;
  }
}

bool contains_space(std::u32string_view s) {
  return std::any_of(s.begin(), s.end(), is_space_cp);
}

}  // namespace

bool is_arabic_letter(char32_t cp) {
  if (cp >= 0x0621 && cp <= 0x064A) return true;       // hamza .. ya
  if (cp >= 0x066E && cp <= 0x06D3 && cp != 0x0670) return true;
  if (cp == 0x06D5) return true;
  if (cp >= 0x0750 && cp <= 0x077F) return true;       // Arabic Supplement
  return false;
}

bool is_arabic_diacritic(char32_t cp) {
  return (cp >= 0x064B && cp <= 0x065F) || cp == 0x0670 || cp == 0x0640;  // tashkeel, dagger alef, tatweel
}

bool is_latin_letter(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z');
}

bool is_digit_cp(char32_t cp) {
  return (cp >= U'0' && cp <= U'9') || (cp >= 0x0660 && cp <= 0x0669) ||
         (cp >= 0x06F0 && cp <= 0x06F9);
}

namespace {

// Characters that may continue a word / mention / hashtag run.
bool is_word_cp(char32_t cp) {
  return is_arabic_letter(cp) || is_latin_letter(cp) || is_digit_cp(cp) ||
         is_arabic_diacritic(cp);
}

bool has_prefix(const utf8::Decoded& d, std::size_t i, std::u32string_view prefix) {
  if (i + prefix.size() > d.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k)
    if (d.cps[i + k] != prefix[k]) return false;
  return true;
}

}  // namespace

EmoticonLexicon EmoticonLexicon::from_entries(const std::vector<std::string>& entries) {
  EmoticonLexicon lex;
  for (const auto& e : entries) {
    if (e.empty()) throw DataError("emoticon lexicon entry is empty");
    std::u32string cps = utf8::to_u32(e);
    if (contains_space(cps))
      throw DataError("emoticon lexicon entry contains whitespace: \"" + e + "\"");
    if (cps.front() == U'@' || cps.front() == U'#')
      throw DataError("emoticon lexicon entry may not start with '@' or '#': \"" + e + "\"");
    if (e.rfind("http://", 0) == 0 || e.rfind("https://", 0) == 0 || e.rfind("www.", 0) == 0)
      throw DataError("emoticon lexicon entry looks like a URL: \"" + e + "\"");
    lex.decoded_.push_back(std::move(cps));
  }
  std::sort(lex.decoded_.begin(), lex.decoded_.end(),
            [](const std::u32string& a, const std::u32string& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  lex.decoded_.erase(std::unique(lex.decoded_.begin(), lex.decoded_.end()),
                     lex.decoded_.end());
  return lex;
}

EmoticonLexicon EmoticonLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open emoticon lexicon: " + path.string());
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    entries.push_back(line);
  }
  return from_entries(entries);
}

std::vector<Token> tokenize(std::string_view text, const EmoticonLexicon& emoticons) {
  std::vector<Token> tokens;
  const utf8::Decoded d = utf8::decode(text);
  const auto slice = [&](std::size_t a, std::size_t b) {
    return std::string(text.substr(d.offsets[a], d.offsets[b] - d.offsets[a]));
  };

  std::size_t i = 0;
  const std::size_t n = d.size();
  while (i < n) {
    if (is_space_cp(d.cps[i])) {
      ++i;
      continue;
    }

    // Emoticons win over everything else, so ":D" is not split into punctuation
    // and "3>" is not read as a number.
    bool matched = false;
    for (const auto& entry : emoticons.entries_longest_first()) {
      if (has_prefix(d, i, entry)) {
        tokens.push_back({slice(i, i + entry.size()), TokenKind::emoticon});
        i += entry.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;

    if (has_prefix(d, i, U"http://") || has_prefix(d, i, U"https://") ||
        has_prefix(d, i, U"www.")) {
      std::size_t j = i;
      while (j < n && !is_space_cp(d.cps[j])) ++j;
      tokens.push_back({slice(i, j), TokenKind::url});
      i = j;
      continue;
    }

    if (d.cps[i] == U'@') {
      std::size_t j = i + 1;
      while (j < n && (is_word_cp(d.cps[j]) || d.cps[j] == U'_')) ++j;
      tokens.push_back({slice(i, j), TokenKind::mention});
      i = j;
      continue;
    }

    if (d.cps[i] == U'#' && i + 1 < n && (is_word_cp(d.cps[i + 1]) || d.cps[i + 1] == U'_')) {
      std::size_t j = i + 1;
      while (j < n && (is_word_cp(d.cps[j]) || d.cps[j] == U'_')) ++j;
      tokens.push_back({slice(i, j), TokenKind::hashtag});
      i = j;
      continue;
    }

    if (is_word_cp(d.cps[i])) {
      std::size_t j = i;
      bool all_digits = true;
      while (j < n && is_word_cp(d.cps[j])) {
        if (!is_digit_cp(d.cps[j])) all_digits = false;
        ++j;
      }
      tokens.push_back({slice(i, j), all_digits ? TokenKind::number : TokenKind::word});
      i = j;
      continue;
    }

    tokens.push_back({slice(i, i + 1), TokenKind::punctuation});
    ++i;
  }
  return tokens;
}

std::set<std::string> letter_variants(const std::string& word, const VariantTable& table) {
  const std::u32string cps = utf8::to_u32(word);
  std::vector<std::u32string> options;
  options.reserve(cps.size());
  for (char32_t cp : cps) {
    const VariantTable::Group* g = table.group_of(cp);
    options.push_back(g ? g->members : std::u32string(1, cp));
  }

  std::set<std::string> out;
  std::u32string current(cps.size(), U'\0');
  // Cartesian product over the per-position alternatives.
  const auto emit = [&](const auto& self, std::size_t pos) -> void {
    if (pos == options.size()) {
      out.insert(utf8::from_u32(current));
      return;
    }
    for (char32_t cp : options[pos]) {
      current[pos] = cp;
      self(self, pos + 1);
    }
  };
  emit(emit, 0);
  return out;
}

double arabic_script_ratio(std::string_view text) {
  std::size_t arabic = 0, latin = 0;
  for (char32_t cp : utf8::decode(text).cps) {
    if (is_arabic_letter(cp))
      ++arabic;
    else if (is_latin_letter(cp))
      ++latin;
  }
  const std::size_t total = arabic + latin;
  if (total == 0) return 0.0;
  return static_cast<double>(arabic) / static_cast<double>(total);
}

std::string normalize_for_match(std::string_view word, const VariantTable& table) {
  std::string out;
  for (char32_t cp : utf8::decode(word).cps) {
    if (is_arabic_diacritic(cp)) continue;
    if (cp >= U'A' && cp <= U'Z') cp = cp - U'A' + U'a';
    utf8::append(out, table.canonical(cp));
  }
  return out;
}

std::vector<std::string> hashtag_segments(std::string_view hashtag_text) {
  std::string_view body = hashtag_text;
  if (!body.empty() && body.front() == '#') body.remove_prefix(1);

  std::vector<std::string> parts;
  std::size_t start = 0;
  const auto flush = [&](std::size_t end) {
    if (end <= start) return;
    std::string part(body.substr(start, end - start));
    const auto cps = utf8::decode(part).cps;
    if (std::any_of(cps.begin(), cps.end(),
                    [](char32_t cp) { return is_arabic_letter(cp) || is_latin_letter(cp); }))
      parts.push_back(std::move(part));
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '_') {
      flush(i);
      start = i + 1;
    }
  }
  flush(body.size());
  return parts;
}

}  // namespace arasent
