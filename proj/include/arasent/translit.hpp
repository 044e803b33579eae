#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "arasent/frequency.hpp"

namespace arasent {

// Franco-Arab (Arabizi) rewrite rules: a Latin sequence maps to one or more
// Arabic alternatives, an empty alternative meaning the sequence may be
// elided (short vowels). Longest Latin sequence wins at each position.
struct TranslitRules {
  struct Rule {
    std::string latin;
    std::vector<std::string> arabic_alternatives;
  };

  std::vector<Rule> rules;  // kept sorted longest-latin-first

  // TSV lines: "seq<TAB><latin><TAB><alt>[|<alt>...]", '#' comments.
  static TranslitRules load(const std::filesystem::path& path);

  void add(const std::string& latin, const std::vector<std::string>& alternatives);
  void sort_rules();
};

struct TranslitResult {
  std::string text;
  std::vector<std::string> unresolved;  // Latin words left for manual review
};

// All Arabic spellings the rule table can produce for one Latin word
// (lowercased first). Empty when the word contains an unmapped letter.
// Generation is capped at `limit` candidates; the cap is far above anything a
// real Arabizi word produces.
std::vector<std::string> franco_candidates(const std::string& latin_word,
                                           const TranslitRules& rules,
                                           std::size_t limit = 4096);

// Rewrites each Latin word of `text`: override if present, otherwise the
// rule-generated candidate ranked best by lexicon frequency (ties: shortest,
// then lexicographic). Words with no candidates stay in place and are listed
// in `unresolved`.
TranslitResult transliterate_franco(const std::string& text, const TranslitRules& rules,
                                    const FrequencyTable& lexicon,
                                    const std::map<std::string, std::string>& overrides);

}  // namespace arasent
