#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arasent/corpus.hpp"
#include "arasent/frequency.hpp"
#include "arasent/textkit.hpp"

namespace arasent {

enum class Dialect { msa, egyptian, other };
enum class Verdict { valid, content_word, needs_review };

std::string to_string(Dialect d);
Dialect dialect_from_string(const std::string& s);
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// one row of the reviewable annotation file; linguistic mappings are always
// human-provided, never guessed by the tool
struct CandidateWord {
  std::string word;
  std::uint64_t count = 0;
  Dialect dialect = Dialect::other;
  std::optional<std::string> msa_correspondent;
  std::optional<std::string> english_gloss;
  bool suffixable = false;
  std::optional<Verdict> verdict_override;
  Verdict verdict = Verdict::needs_review;
  std::string evidence;
};

std::vector<CandidateWord> load_candidates(const std::filesystem::path& path);

enum class ListKind { msa_general, corpus_based, egyptian_general, combined };

std::string to_string(ListKind k);
ListKind list_kind_from_string(const std::string& s);

struct StopwordList {
  std::string name;
  ListKind kind = ListKind::msa_general;
  std::set<std::string> words;

  void validate() const;  // unique is implicit; checks non-empty, whitespace-free
  static StopwordList load(const std::filesystem::path& path, ListKind kind,
                           std::string name = {});
  void save(const std::filesystem::path& path) const;
};

struct MorphRules {
  std::vector<std::string> prefixes;
  std::vector<std::string> pronoun_suffixes;
  VariantTable variant_table;
  std::set<std::string> exclusions;

  void validate() const;
  // TSV records: prefix <p> | suffix <s> | variant <canonical> <members> | exclude <w>
  static MorphRules load(const std::filesystem::path& path);
};

FrequencyTable build_frequency_table(const std::vector<std::vector<Document>>& corpora);
void add_documents(FrequencyTable& table, const std::vector<Document>& documents);

std::vector<std::pair<std::string, std::uint64_t>> top_k(const FrequencyTable& table,
                                                         std::size_t k = 200);

struct ValidityResult {
  Verdict verdict = Verdict::needs_review;
  std::string evidence;
};

ValidityResult classify_validity(const CandidateWord& word,
                                 const std::set<std::string>& msa_lists,
                                 const std::set<std::string>& english_stoplist);

void resolve_verdicts(std::vector<CandidateWord>& candidates,
                      const std::set<std::string>& msa_lists,
                      const std::set<std::string>& english_stoplist);

std::set<std::string> expand_morphology(const std::string& word, const MorphRules& rules,
                                        bool suffixable);

StopwordList generate_corpus_based(const FrequencyTable& table, const MorphRules& rules,
                                   std::size_t k = 200);

struct EgyptianGenResult {
  StopwordList list;
  std::vector<std::string> needs_review;   // excluded pending human annotation
  std::vector<std::string> content_words;  // excluded as domain-specific
};

EgyptianGenResult generate_egyptian_general(const FrequencyTable& table,
                                            const std::vector<CandidateWord>& candidates,
                                            const MorphRules& rules, std::size_t k = 200);

StopwordList combine_lists(const StopwordList& a, const StopwordList& b);

std::vector<Token> remove_stopwords(const std::vector<Token>& tokens,
                                    const StopwordList& list);

}  // namespace arasent
