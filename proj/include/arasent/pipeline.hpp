#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "arasent/corpus.hpp"
#include "arasent/frequency.hpp"
#include "arasent/textkit.hpp"
#include "arasent/translit.hpp"

namespace arasent {

struct PipelineConfig {
  std::set<std::string> topic_words;  // empty set disables the off-topic filter
  std::vector<std::string> spam_phrases;
  std::map<std::string, std::string> abbreviations;
  TranslitRules translit_rules;
  std::map<std::string, std::string> translit_overrides;
  FrequencyTable translit_lexicon;  // merged with a lexicon built from the batch
  std::map<std::string, std::string> gloss;  // english -> arabic, keys lowercase
  EmoticonLexicon emoticons;
  VariantTable variants = VariantTable::standard();
};

struct PipelineResult {
  std::vector<Document> documents;
  FilterReport report;
  std::vector<std::string> diagnostics;  // unresolved words, untranslated tokens
};

PipelineResult run_pipeline(const std::vector<RawPost>& posts,
                            const PipelineConfig& config);

bool is_mention_only(const std::string& text, const EmoticonLexicon& emoticons = {});

std::string replace_abbreviations(const std::string& text,
                                  const std::map<std::string, std::string>& map);

struct TranslationResult {
  std::string text;
  std::vector<std::string> unresolved;
};

TranslationResult translate_english_tokens(const std::string& text,
                                           const std::map<std::string, std::string>& gloss);

Label annotate_by_rating(int rating);

struct LabelCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t neutral = 0;
  std::size_t unlabeled = 0;

  std::size_t total() const { return positive + negative + neutral + unlabeled; }
  void add(Label label);
  int percent(std::size_t part) const;  // floor of 100*part/total, 0 on empty
};

struct CorpusStats {
  std::map<Source, LabelCounts> per_source;
  LabelCounts overall;

  std::string to_csv() const;
};

CorpusStats corpus_stats(const std::vector<Document>& docs);

}  // namespace arasent
