#include "arasent/stopgen.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "arasent/errors.hpp"
#include "arasent/resources.hpp"
#include "arasent/utf8.hpp"

namespace arasent {

std::string to_string(Dialect d) {
  switch (d) {
    case Dialect::msa: return "msa";
    case Dialect::egyptian: return "egyptian";
    case Dialect::other: return "other";
  }
  throw std::logic_error("bad Dialect");
}

Dialect dialect_from_string(const std::string& s) {
  if (s == "msa") return Dialect::msa;
  if (s == "egyptian") return Dialect::egyptian;
  if (s == "other") return Dialect::other;
  throw DataError("unknown dialect: " + s);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::valid: return "valid";
    case Verdict::content_word: return "content_word";
    case Verdict::needs_review: return "needs_review";
  }
  throw std::logic_error("bad Verdict");
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "valid") return Verdict::valid;
  if (s == "content_word") return Verdict::content_word;
  if (s == "needs_review") return Verdict::needs_review;
  throw DataError("unknown verdict: " + s);
}

std::string to_string(ListKind k) {
  switch (k) {
    case ListKind::msa_general: return "msa_general";
    case ListKind::corpus_based: return "corpus_based";
    case ListKind::egyptian_general: return "egyptian_general";
    case ListKind::combined: return "combined";
  }
  throw std::logic_error("bad ListKind");
}

ListKind list_kind_from_string(const std::string& s) {
  if (s == "msa_general") return ListKind::msa_general;
  if (s == "corpus_based") return ListKind::corpus_based;
  if (s == "egyptian_general") return ListKind::egyptian_general;
  if (s == "combined") return ListKind::combined;
  throw DataError("unknown list kind: " + s);
}

std::vector<CandidateWord> load_candidates(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open candidate file: " + path.string());
  std::vector<CandidateWord> out;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (!utf8::valid(line)) throw DataError(where + ": invalid UTF-8");
    const auto f = split_tsv_line(line);
    // the trailing verdict_override column may be omitted entirely
    if (f.size() != 5 && f.size() != 6)
      throw DataError(where + ": expected 5 or 6 columns "
                              "(word, dialect, msa_correspondent, english_gloss, "
                              "suffixable, [verdict_override]), got " +
                      std::to_string(f.size()));
    CandidateWord c;
    c.word = f[0];
    if (c.word.empty()) throw DataError(where + ": empty word");
    if (!seen.insert(c.word).second) throw DataError(where + ": duplicate word " + c.word);
    try {
      c.dialect = dialect_from_string(f[1]);
      if (!f[2].empty()) c.msa_correspondent = f[2];
      if (!f[3].empty()) c.english_gloss = f[3];
      if (f[4] == "1")
        c.suffixable = true;
      else if (f[4] == "0")
        c.suffixable = false;
      else
        throw DataError("suffixable must be 0 or 1, got \"" + f[4] + "\"");
      if (f.size() == 6 && !f[5].empty()) c.verdict_override = verdict_from_string(f[5]);
    } catch (const DataError& e) {
      throw DataError(where + ": " + e.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

void StopwordList::validate() const {
  for (const std::string& w : words) {
    if (w.empty()) throw DataError("stopword list " + name + " contains an empty word");
    for (char ch : w)
      if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
        throw DataError("stopword list " + name + " entry contains whitespace: \"" + w +
                        "\"");
  }
}

StopwordList StopwordList::load(const std::filesystem::path& path, ListKind kind,
                                std::string name) {
  StopwordList out;
  out.kind = kind;
  out.name = name.empty() ? path.stem().string() : std::move(name);
  const auto lines = load_wordlist(path);
  out.words.insert(lines.begin(), lines.end());
  out.validate();
  return out;
}

void StopwordList::save(const std::filesystem::path& path) const {
  validate();
  std::string body;
  for (const std::string& w : words) {
    body += w;
    body += '\n';
  }
  write_file_atomic(path, body);
}

void MorphRules::validate() const {
  const auto check = [](const std::string& s, const char* what) {
    if (s.empty()) throw DataError(std::string(what) + " is empty");
    for (char32_t cp : utf8::decode(s).cps)
      if (!is_arabic_letter(cp))
        throw DataError(std::string(what) + " \"" + s + "\" contains a non-Arabic letter");
  };
  for (const auto& p : prefixes) check(p, "prefix");
  for (const auto& s : pronoun_suffixes) check(s, "suffix");
  variant_table.validate();
}

MorphRules MorphRules::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open morphology rules: " + path.string());
  MorphRules out;
  out.variant_table = {};  // variant groups come only from the file
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (!utf8::valid(line)) throw DataError(where + ": invalid UTF-8");
    const auto f = split_tsv_line(line);
    if (f[0] == "prefix" && f.size() == 2) {
      out.prefixes.push_back(f[1]);
    } else if (f[0] == "suffix" && f.size() == 2) {
      out.pronoun_suffixes.push_back(f[1]);
    } else if (f[0] == "variant" && f.size() == 3) {
      const std::u32string canon = utf8::to_u32(f[1]);
      if (canon.size() != 1)
        throw DataError(where + ": variant canonical must be a single letter");
      VariantTable::Group g;
      g.canonical = canon[0];
      g.members = utf8::to_u32(f[2]);
      out.variant_table.groups.push_back(std::move(g));
    } else if (f[0] == "exclude" && f.size() == 2) {
      out.exclusions.insert(f[1]);
    } else {
      throw DataError(where + ": unrecognized morphology record \"" + f[0] + "\"");
    }
  }
  try {
    out.validate();
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return out;
}

void add_documents(FrequencyTable& table, const std::vector<Document>& documents) {
  for (const Document& doc : documents) {
    for (const Token& tok : doc.tokens) {
      if (tok.kind == TokenKind::word) {
        table.add(tok.text);
      } else if (tok.kind == TokenKind::hashtag) {
        for (const std::string& part : hashtag_segments(tok.text)) table.add(part);
      }
    }
  }
}

FrequencyTable build_frequency_table(const std::vector<std::vector<Document>>& corpora) {
  FrequencyTable table;
  for (const auto& corpus : corpora) add_documents(table, corpus);
  return table;
}

std::vector<std::pair<std::string, std::uint64_t>> top_k(const FrequencyTable& table,
                                                         std::size_t k) {
  if (k < 1) throw std::invalid_argument("top_k requires k >= 1");
  std::vector<std::pair<std::string, std::uint64_t>> ranked(table.entries.begin(),
                                                            table.entries.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

ValidityResult classify_validity(const CandidateWord& word,
                                 const std::set<std::string>& msa_lists,
                                 const std::set<std::string>& english_stoplist) {
  if (word.verdict_override)
    return {*word.verdict_override, "manual override"};
  if (msa_lists.count(word.word))
    return {Verdict::valid, "word \"" + word.word + "\" is in the MSA list"};
  if (word.msa_correspondent && msa_lists.count(*word.msa_correspondent))
    return {Verdict::valid,
            "MSA correspondent \"" + *word.msa_correspondent + "\" is in the MSA list"};
  if (word.english_gloss && english_stoplist.count(*word.english_gloss))
    return {Verdict::valid,
            "gloss \"" + *word.english_gloss + "\" is in the English stopword list"};
  return {Verdict::needs_review, "no validity condition matched"};
}

void resolve_verdicts(std::vector<CandidateWord>& candidates,
                      const std::set<std::string>& msa_lists,
                      const std::set<std::string>& english_stoplist) {
  for (CandidateWord& c : candidates) {
    const ValidityResult r = classify_validity(c, msa_lists, english_stoplist);
    c.verdict = r.verdict;
    c.evidence = r.evidence;
  }
}

std::set<std::string> expand_morphology(const std::string& word, const MorphRules& rules,
                                        bool suffixable) {
  if (word.empty()) throw std::invalid_argument("expand_morphology requires a word");

  std::vector<std::string> bases = {word};
  if (suffixable)
    for (const std::string& suffix : rules.pronoun_suffixes) bases.push_back(word + suffix);

  std::set<std::string> forms;
  for (const std::string& base : bases) {
    for (const std::string& variant : letter_variants(base, rules.variant_table)) {
      forms.insert(variant);
      for (const std::string& prefix : rules.prefixes) forms.insert(prefix + variant);
    }
  }
  for (const std::string& bad : rules.exclusions) forms.erase(bad);
  forms.insert(word);  // survives manual exclusion by definition
  return forms;
}

StopwordList generate_corpus_based(const FrequencyTable& table, const MorphRules& rules,
                                   std::size_t k) {
  StopwordList out;
  out.name = "corpus_based";
  out.kind = ListKind::corpus_based;
  for (const auto& [word, count] : top_k(table, k)) {
    const auto forms = expand_morphology(word, rules, false);
    out.words.insert(forms.begin(), forms.end());
  }
  out.validate();
  return out;
}

EgyptianGenResult generate_egyptian_general(const FrequencyTable& table,
                                            const std::vector<CandidateWord>& candidates,
                                            const MorphRules& rules, std::size_t k) {
  std::map<std::string, const CandidateWord*> by_word;
  for (const CandidateWord& c : candidates) by_word.emplace(c.word, &c);

  EgyptianGenResult result;
  result.list.name = "egyptian_general";
  result.list.kind = ListKind::egyptian_general;

  std::map<std::string, bool> stems;  // word -> suffixable
  const auto consider = [&](const std::string& word) {
    const auto it = by_word.find(word);
    if (it == by_word.end()) {
      result.needs_review.push_back(word);
      return;
    }
    const CandidateWord& c = *it->second;
    switch (c.verdict) {
      case Verdict::valid: stems.emplace(c.word, c.suffixable); break;
      case Verdict::content_word: result.content_words.push_back(c.word); break;
      case Verdict::needs_review: result.needs_review.push_back(c.word); break;
    }
  };

  for (const auto& [word, count] : top_k(table, k)) consider(word);
  for (const CandidateWord& c : candidates)
    if (c.dialect == Dialect::egyptian && c.verdict == Verdict::valid)
      stems.emplace(c.word, c.suffixable);

  for (const auto& [stem, suffixable] : stems) {
    const auto forms = expand_morphology(stem, rules, suffixable);
    result.list.words.insert(forms.begin(), forms.end());
  }

  const auto dedupe = [](std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(result.needs_review);
  dedupe(result.content_words);
  result.list.validate();
  return result;
}

StopwordList combine_lists(const StopwordList& a, const StopwordList& b) {
  StopwordList out;
  out.name = a.name + "+" + b.name;
  out.kind = ListKind::combined;
  out.words = a.words;
  out.words.insert(b.words.begin(), b.words.end());
  return out;
}

std::vector<Token> remove_stopwords(const std::vector<Token>& tokens,
                                    const StopwordList& list) {
  std::vector<Token> kept;
  kept.reserve(tokens.size());
  for (const Token& tok : tokens)
    if (!list.words.count(tok.text)) kept.push_back(tok);
  return kept;
}

}  // namespace arasent
