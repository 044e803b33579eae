#include "arasent/pipeline.hpp"

#include <algorithm>

#include "arasent/errors.hpp"
#include "arasent/utf8.hpp"

namespace arasent {

bool is_mention_only(const std::string& text, const EmoticonLexicon& emoticons) {
  bool saw_mention = false;
  for (const Token& tok : tokenize(text, emoticons)) {
    if (tok.kind == TokenKind::mention)
      saw_mention = true;
    else if (tok.kind != TokenKind::punctuation)
      return false;
  }
  return saw_mention;
}

namespace {

bool is_word_cp(char32_t cp) {
  return is_arabic_letter(cp) || is_latin_letter(cp) || (cp >= U'0' && cp <= U'9');
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

std::string replace_abbreviations(const std::string& text,
                                  const std::map<std::string, std::string>& map) {
  struct Key {
    std::vector<char32_t> cps;
    const std::string* expansion;
  };
  std::vector<Key> keys;
  keys.reserve(map.size());
  for (const auto& [k, v] : map) {
    if (k.empty()) throw DataError("abbreviation map contains an empty key");
    keys.push_back({utf8::decode(k).cps, &v});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.cps.size() != b.cps.size()) return a.cps.size() > b.cps.size();
    return a.cps < b.cps;
  });

  const utf8::Decoded d = utf8::decode(text);
  const std::size_t n = d.size();
  std::string out;
  std::size_t i = 0;
  while (i < n) {
    // URLs pass through untouched; punctuation-edged keys like ":/" would
    // otherwise fire inside the scheme
    if (url_starts_at(d, i)) {
      std::size_t j = i;
      while (j < n && !is_space_like(d.cps[j])) ++j;
      out.append(text, d.offsets[i], d.offsets[j] - d.offsets[i]);
      i = j;
      continue;
    }
    const Key* hit = nullptr;
    for (const Key& key : keys) {
      const std::size_t len = key.cps.size();
      if (i + len > n) continue;
      if (!std::equal(key.cps.begin(), key.cps.end(), d.cps.begin() + i)) continue;
      // whole-token match: a key edge made of word characters must not
      // touch an adjacent word character
      if (is_word_cp(key.cps.front()) && i > 0 && is_word_cp(d.cps[i - 1])) continue;
      if (is_word_cp(key.cps.back()) && i + len < n && is_word_cp(d.cps[i + len]))
        continue;
      hit = &key;
      break;
    }
    if (hit) {
      out += *hit->expansion;
      i += hit->cps.size();
    } else {
      out.append(text, d.offsets[i], d.offsets[i + 1] - d.offsets[i]);
      ++i;
    }
  }
  return out;
}

namespace {

bool is_latin_run_cp(char32_t cp) {
  return is_latin_letter(cp) || (cp >= U'0' && cp <= U'9');
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

// maximal letter/digit runs holding at least one Latin letter, with byte spans
struct LatinRun {
  std::size_t begin_byte, end_byte;
  std::string word;
};

std::vector<LatinRun> latin_runs(const std::string& text) {
  const utf8::Decoded d = utf8::decode(text);
  std::vector<LatinRun> runs;
  std::size_t i = 0;
  const std::size_t n = d.size();
  while (i < n) {
    // never treat URL innards as prose
    if (url_starts_at(d, i)) {
      while (i < n && !is_space_like(d.cps[i])) ++i;
      continue;
    }
    if (!is_latin_run_cp(d.cps[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    bool has_letter = false;
    while (j < n && is_latin_run_cp(d.cps[j])) {
      if (is_latin_letter(d.cps[j])) has_letter = true;
      ++j;
    }
    if (has_letter)
      runs.push_back({d.offsets[i], d.offsets[j],
                      text.substr(d.offsets[i], d.offsets[j] - d.offsets[i])});
    i = j;
  }
  return runs;
}

}  // namespace

TranslationResult translate_english_tokens(const std::string& text,
                                           const std::map<std::string, std::string>& gloss) {
  TranslationResult result;
  std::size_t copied = 0;
  for (const LatinRun& run : latin_runs(text)) {
    result.text.append(text, copied, run.begin_byte - copied);
    const auto it = gloss.find(ascii_lower(run.word));
    if (it != gloss.end()) {
      result.text += it->second;
    } else {
      result.text += run.word;
      result.unresolved.push_back(run.word);
    }
    copied = run.end_byte;
  }
  result.text.append(text, copied, text.size() - copied);
  return result;
}

Label annotate_by_rating(int rating) {
  if (rating < 1 || rating > 10)
    throw DataError("rating out of range 1..10: " + std::to_string(rating));
  if (rating > 5) return Label::positive;
  if (rating < 5) return Label::negative;
  return Label::neutral;
}

namespace {

struct Work {
  const RawPost* post;
  std::string text;
};

bool matches_spam_phrase(const std::string& text, const PipelineConfig& config) {
  if (config.spam_phrases.empty()) return false;
  const std::string haystack = normalize_for_match(text, config.variants);
  for (const std::string& phrase : config.spam_phrases) {
    const std::string needle = normalize_for_match(phrase, config.variants);
    if (!needle.empty() && haystack.find(needle) != std::string::npos) return true;
  }
  return false;
}

bool is_url_only(const std::string& text, const PipelineConfig& config) {
  bool has_url = false, has_word = false;
  for (const Token& tok : tokenize(text, config.emoticons)) {
    if (tok.kind == TokenKind::url) has_url = true;
    if (tok.kind == TokenKind::word) has_word = true;
  }
  return has_url && !has_word;
}

bool is_off_topic(const std::string& text, const std::set<std::string>& topics,
                  const PipelineConfig& config) {
  if (topics.empty()) return false;
  for (const Token& tok : tokenize(text, config.emoticons)) {
    std::vector<std::string> words;
    if (tok.kind == TokenKind::word)
      words.push_back(tok.text);
    else if (tok.kind == TokenKind::hashtag)
      words = hashtag_segments(tok.text);
    for (const std::string& w : words)
      if (topics.count(normalize_for_match(w, config.variants))) return false;
  }
  return true;
}

}  // namespace

PipelineResult run_pipeline(const std::vector<RawPost>& posts,
                            const PipelineConfig& config) {
  PipelineResult result;
  result.report.initial_count = posts.size();

  std::set<std::string> topics;
  for (const std::string& w : config.topic_words)
    topics.insert(normalize_for_match(w, config.variants));

  std::vector<Work> live;
  live.reserve(posts.size());
  bool any_osn = false;
  for (const RawPost& post : posts) {
    live.push_back({&post, post.text});
    any_osn = any_osn || post.source != Source::review;
  }

  const auto filter_stage = [&](const char* name, auto&& drop) {
    std::vector<Work> kept;
    kept.reserve(live.size());
    for (Work& w : live) {
      if (w.post->source != Source::review && drop(w))
        continue;
      kept.push_back(std::move(w));
    }
    live = std::move(kept);
    result.report.stages.emplace_back(name, live.size());
  };

  if (any_osn) {
    filter_stage("url_only", [&](const Work& w) {
      return is_url_only(w.text, config) || matches_spam_phrase(w.text, config);
    });
    filter_stage("photo_only", [&](const Work& w) { return w.post->has_photo_only; });
    filter_stage("mention_only",
                 [&](const Work& w) { return is_mention_only(w.text, config.emoticons); });
    filter_stage("off_topic",
                 [&](const Work& w) { return is_off_topic(w.text, topics, config); });

    // words seen in the batch's Arabic posts help rank Franco-Arab candidates
    FrequencyTable lexicon = config.translit_lexicon;
    for (const Work& w : live) {
      if (arabic_script_ratio(w.text) < 0.5) continue;
      for (const Token& tok : tokenize(w.text, config.emoticons))
        if (tok.kind == TokenKind::word) lexicon.add(tok.text);
    }

    filter_stage("non_arabic", [&](Work& w) {
      if (arabic_script_ratio(w.text) >= 0.5) return false;
      const std::size_t latin_words = latin_runs(w.text).size();
      if (latin_words == 0) return true;  // no letters at all, nothing to recover
      TranslitResult tr = transliterate_franco(w.text, config.translit_rules, lexicon,
                                               config.translit_overrides);
      const std::size_t resolved = latin_words - tr.unresolved.size();
      if (resolved * 2 < latin_words) return true;
      for (const std::string& word : tr.unresolved)
        result.diagnostics.push_back("post " + w.post->id +
                                     ": unresolved Franco-Arab word \"" + word + "\"");
      w.text = std::move(tr.text);
      return false;
    });
  }

  for (Work& w : live) {
    w.text = replace_abbreviations(w.text, config.abbreviations);
    TranslationResult tr = translate_english_tokens(w.text, config.gloss);
    for (const std::string& word : tr.unresolved)
      result.diagnostics.push_back("post " + w.post->id +
                                   ": untranslated English token \"" + word + "\"");
    w.text = std::move(tr.text);
  }

  result.documents.reserve(live.size());
  for (const Work& w : live) {
    Document doc;
    doc.id = w.post->id;
    doc.source = w.post->source;
    doc.raw_text = w.post->text;
    doc.clean_text = w.text;
    doc.tokens = tokenize(doc.clean_text, config.emoticons);
    doc.label = w.post->label;
    if (w.post->source == Source::review && w.post->rating)
      doc.label = annotate_by_rating(*w.post->rating);
    result.documents.push_back(std::move(doc));
  }
  return result;
}

void LabelCounts::add(Label label) {
  switch (label) {
    case Label::positive: ++positive; break;
    case Label::negative: ++negative; break;
    case Label::neutral: ++neutral; break;
    case Label::unlabeled: ++unlabeled; break;
  }
}

int LabelCounts::percent(std::size_t part) const {
  const std::size_t n = total();
  if (n == 0) return 0;
  return static_cast<int>(part * 100 / n);
}

CorpusStats corpus_stats(const std::vector<Document>& docs) {
  CorpusStats stats;
  for (const Document& doc : docs) {
    stats.per_source[doc.source].add(doc.label);
    stats.overall.add(doc.label);
  }
  return stats;
}

std::string CorpusStats::to_csv() const {
  std::string out =
      "source,positive,negative,neutral,unlabeled,total,"
      "positive_pct,negative_pct,neutral_pct\n";
  const auto row = [&](const std::string& name, const LabelCounts& c) {
    out += name + "," + std::to_string(c.positive) + "," + std::to_string(c.negative) +
           "," + std::to_string(c.neutral) + "," + std::to_string(c.unlabeled) + "," +
           std::to_string(c.total()) + "," + std::to_string(c.percent(c.positive)) + "," +
           std::to_string(c.percent(c.negative)) + "," +
           std::to_string(c.percent(c.neutral)) + "\n";
  };
  for (const auto& [source, counts] : per_source) row(to_string(source), counts);
  row("all", overall);
  return out;
}

}  // namespace arasent
