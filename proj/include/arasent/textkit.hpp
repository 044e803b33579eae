#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace arasent {

enum class TokenKind { word, emoticon, punctuation, number, mention, url, hashtag };

std::string_view to_string(TokenKind k);
TokenKind token_kind_from_string(std::string_view s);

struct Token {
  std::string text;
  TokenKind kind = TokenKind::word;

  bool operator==(const Token&) const = default;
};

// Orthographic letter-equivalence classes: alef forms, ya/alef-maksura and
// ta-marbuta/ha are routinely interchanged in OSN spelling.
struct VariantTable {
  struct Group {
    std::u32string members;
    char32_t canonical;
  };

  std::vector<Group> groups;

  // {آ,أ,إ,ا}->ا, {ى,ي}->ي, {ة,ه}->ة
  static const VariantTable& standard();

  const Group* group_of(char32_t cp) const;
  char32_t canonical(char32_t cp) const;

  // Throws DataError unless groups are pairwise disjoint and each contains
  // its canonical letter.
  void validate() const;
};

// Emoticon entries sorted for longest-match-first lookup during tokenization.
class EmoticonLexicon {
 public:
  EmoticonLexicon() = default;

  // Entries must be non-empty, whitespace-free, not start with '@' or '#'
  // and not look like URLs, or they would break token-kind guarantees.
  static EmoticonLexicon from_entries(const std::vector<std::string>& entries);

  // One entry per line, '#' starts a comment line.
  static EmoticonLexicon load(const std::filesystem::path& path);

  bool empty() const { return decoded_.empty(); }
  std::size_t size() const { return decoded_.size(); }
  const std::vector<std::u32string>& entries_longest_first() const { return decoded_; }

 private:
  std::vector<std::u32string> decoded_;
};

bool is_arabic_letter(char32_t cp);
bool is_arabic_diacritic(char32_t cp);
bool is_latin_letter(char32_t cp);
bool is_digit_cp(char32_t cp);

std::vector<Token> tokenize(std::string_view text,
                            const EmoticonLexicon& emoticons = EmoticonLexicon());

// All spellings reachable by substituting group members at each variant
// position. Always contains `word`.
std::set<std::string> letter_variants(const std::string& word, const VariantTable& table);

// Arabic letters / (Arabic + Latin letters); 0 when the text has no letters.
// Diacritics and digits are not letters.
double arabic_script_ratio(std::string_view text);

// Maps every variant-group letter to its canonical member, lowercases ASCII
// and drops diacritics. Used for keyword matching, not display.
std::string normalize_for_match(std::string_view word, const VariantTable& table);

// Word parts of a hashtag token: '#' stripped, split on '_', parts without
// letters dropped.
std::vector<std::string> hashtag_segments(std::string_view hashtag_text);

}  // namespace arasent
