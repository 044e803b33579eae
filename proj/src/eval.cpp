#include "arasent/eval.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <random>
#include <stdexcept>

#include "arasent/errors.hpp"
#include "arasent/features.hpp"

namespace arasent {

std::string to_string(Classifier c) {
  switch (c) {
    case Classifier::nb: return "NB";
    case Classifier::dt: return "DT";
  }
  throw std::logic_error("bad Classifier");
}

std::string to_string(FeatureMode m) {
  switch (m) {
    case FeatureMode::unigram: return "unigram";
    case FeatureMode::bigram: return "bigram";
  }
  throw std::logic_error("bad FeatureMode");
}

std::string to_string(StopwordMode m) {
  switch (m) {
    case StopwordMode::without: return "without";
    case StopwordMode::msa_lists: return "msa_lists";
    case StopwordMode::corpus_based: return "corpus_based";
    case StopwordMode::egyptian_general: return "egyptian_general";
    case StopwordMode::all_lists: return "all_lists";
  }
  throw std::logic_error("bad StopwordMode");
}

StopwordMode stopword_mode_from_string(const std::string& s) {
  for (StopwordMode m : kAllStopwordModes)
    if (to_string(m) == s) return m;
  throw DataError("unknown stopword mode: " + s);
}

namespace {

// hand-rolled shuffle: std::shuffle leaves the algorithm unspecified, and
// splits must be reproducible across standard libraries
void deterministic_shuffle(std::vector<std::size_t>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

std::size_t train_size(double fraction, std::size_t n) {
  return static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(n) - 1e-9));
}

}  // namespace

std::pair<std::vector<Document>, std::vector<Document>> split_corpus(
    const std::vector<Document>& docs, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
    throw std::invalid_argument("train_fraction must be in (0,1)");

  std::vector<std::size_t> retained;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const Label label = docs[i].label;
    if (label == Label::unlabeled) continue;  // nothing to learn from or score
    if (spec.exclude_neutral && label == Label::neutral) continue;
    retained.push_back(i);
    labels.insert(to_string(label));
  }
  if (retained.size() < 2)
    throw DataError("too few labeled documents to split: " +
                    std::to_string(retained.size()));
  if (labels.size() < 2) throw DataError("all documents share one label; cannot evaluate");

  std::mt19937_64 rng(spec.seed);
  std::vector<std::size_t> train_idx, test_idx;
  if (spec.stratify) {
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i : retained) groups[to_string(docs[i].label)].push_back(i);
    for (auto& [label, idx] : groups) {
      deterministic_shuffle(idx, rng);
      const std::size_t cut = train_size(spec.train_fraction, idx.size());
      train_idx.insert(train_idx.end(), idx.begin(), idx.begin() + cut);
      test_idx.insert(test_idx.end(), idx.begin() + cut, idx.end());
    }
  } else {
    deterministic_shuffle(retained, rng);
    const std::size_t cut = train_size(spec.train_fraction, retained.size());
    train_idx.assign(retained.begin(), retained.begin() + cut);
    test_idx.assign(retained.begin() + cut, retained.end());
  }

  std::pair<std::vector<Document>, std::vector<Document>> out;
  for (std::size_t i : train_idx) out.first.push_back(docs[i]);
  for (std::size_t i : test_idx) out.second.push_back(docs[i]);
  return out;
}

double accuracy(const std::vector<std::string>& predictions,
                const std::vector<std::string>& gold) {
  if (predictions.size() != gold.size())
    throw std::invalid_argument("predictions and gold differ in length");
  if (predictions.empty()) throw std::invalid_argument("accuracy of zero predictions");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i)
    if (predictions[i] == gold[i]) ++hits;
  return static_cast<double>(hits) / static_cast<double>(predictions.size());
}

double measure_seconds(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto elapsed = std::chrono::steady_clock::now() - start;
  const auto ms = std::chrono::duration<double, std::milli>(elapsed).count();
  return std::round(ms) / 1000.0;
}

namespace {

std::vector<LabeledExample> featurize(const std::vector<Document>& docs,
                                      FeatureMode mode, const StopwordList* list) {
  std::vector<LabeledExample> out;
  out.reserve(docs.size());
  for (const Document& doc : docs) {
    const std::vector<Token>* tokens = &doc.tokens;
    std::vector<Token> filtered;
    if (list) {
      filtered = remove_stopwords(doc.tokens, *list);
      tokens = &filtered;
    }
    FeatureSet features = mode == FeatureMode::unigram ? extract_unigrams(*tokens)
                                                       : extract_bigrams(*tokens);
    out.emplace_back(std::move(features), to_string(doc.label));
  }
  return out;
}

EvalResult run_cell(const std::string& corpus_name, Classifier classifier,
                    FeatureMode feature_mode, StopwordMode stopword_mode,
                    const std::vector<Document>& train, const std::vector<Document>& test,
                    const StopwordList* list, const MatrixOptions& options) {
  EvalResult cell;
  cell.corpus_name = corpus_name;
  cell.classifier = classifier;
  cell.feature_mode = feature_mode;
  cell.stopword_mode = stopword_mode;
  try {
    const auto train_examples = featurize(train, feature_mode, list);
    const auto test_examples = featurize(test, feature_mode, list);

    std::vector<std::string> predictions, gold;
    gold.reserve(test_examples.size());
    for (const auto& [features, label] : test_examples) gold.push_back(label);

    if (classifier == Classifier::nb) {
      NBModel model;
      cell.train_time_seconds = measure_seconds(
          [&] { model = nb_train(train_examples, options.nb_smoothing); });
      for (const auto& [features, label] : test_examples)
        predictions.push_back(nb_predict(model, features).label);
    } else {
      DTModel model;
      cell.train_time_seconds =
          measure_seconds([&] { model = dt_train(train_examples, options.dt_params); });
      for (const auto& [features, label] : test_examples)
        predictions.push_back(dt_predict(model, features));
    }
    cell.accuracy = accuracy(predictions, gold);
  } catch (const std::exception& e) {
    cell.error = e.what();
    cell.accuracy = std::nan("");
    cell.train_time_seconds = 0.0;
  }
  return cell;
}

}  // namespace

std::vector<EvalResult> run_matrix(const std::vector<NamedCorpus>& corpora,
                                   const std::map<StopwordMode, StopwordList>& lists,
                                   const MatrixOptions& options) {
  for (StopwordMode mode : kAllStopwordModes)
    if (mode != StopwordMode::without && !lists.count(mode))
      throw DataError("missing stopword list for mode " + to_string(mode));

  struct Cell {
    std::string corpus;
    Classifier classifier;
    FeatureMode features;
    StopwordMode stopwords;
    const std::vector<Document>* train;
    const std::vector<Document>* test;
    const StopwordList* list;
  };

  std::vector<std::pair<std::vector<Document>, std::vector<Document>>> splits;
  splits.reserve(corpora.size());
  std::vector<Cell> cells;
  std::vector<EvalResult> failed_corpora;
  for (const NamedCorpus& corpus : corpora) {
    try {
      splits.push_back(split_corpus(corpus.docs, options.split));
    } catch (const std::exception& e) {
      // the whole corpus is unusable; record the failure on every cell
      for (Classifier c : {Classifier::nb, Classifier::dt})
        for (FeatureMode f : {FeatureMode::unigram, FeatureMode::bigram})
          for (StopwordMode s : kAllStopwordModes) {
            EvalResult r;
            r.corpus_name = corpus.name;
            r.classifier = c;
            r.feature_mode = f;
            r.stopword_mode = s;
            r.error = e.what();
            r.accuracy = std::nan("");
            failed_corpora.push_back(r);
          }
      splits.emplace_back();
      continue;
    }
    const auto& [train, test] = splits.back();
    for (Classifier c : {Classifier::nb, Classifier::dt})
      for (FeatureMode f : {FeatureMode::unigram, FeatureMode::bigram})
        for (StopwordMode s : kAllStopwordModes)
          cells.push_back({corpus.name, c, f, s, &train, &test,
                           s == StopwordMode::without ? nullptr : &lists.at(s)});
  }

  std::vector<EvalResult> results(cells.size());
  if (options.serial) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell& c = cells[i];
      results[i] = run_cell(c.corpus, c.classifier, c.features, c.stopwords, *c.train,
                            *c.test, c.list, options);
    }
  } else {
    std::vector<std::future<EvalResult>> futures;
    futures.reserve(cells.size());
    for (const Cell& c : cells)
      futures.push_back(std::async(std::launch::async, [&c, &options] {
        return run_cell(c.corpus, c.classifier, c.features, c.stopwords, *c.train,
                        *c.test, c.list, options);
      }));
    for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  }

  results.insert(results.end(), failed_corpora.begin(), failed_corpora.end());
  return results;
}

namespace {

std::string fmt(double value, int places) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, value);
  return buf;
}

}  // namespace

std::string results_to_csv(const std::vector<EvalResult>& results) {
  std::string out = "corpus,classifier,features,stopwords,accuracy,train_time_s\n";
  for (const EvalResult& r : results) {
    out += r.corpus_name + "," + to_string(r.classifier) + "," +
           to_string(r.feature_mode) + "," + to_string(r.stopword_mode) + "," +
           (r.error.empty() ? fmt(r.accuracy, 4) : "nan") + "," +
           fmt(r.train_time_seconds, 3) + "\n";
  }
  return out;
}

std::string results_to_markdown(const std::vector<EvalResult>& results) {
  std::string out;
  // group rows as corpus x classifier tables, stopword modes down the side
  struct Row {
    double acc[2] = {0, 0};
    double time[2] = {0, 0};
    std::string error;
  };
  std::map<std::string, std::map<std::string, std::map<std::string, Row>>> grouped;
  std::vector<std::string> corpus_order;
  for (const EvalResult& r : results) {
    if (grouped.find(r.corpus_name) == grouped.end()) corpus_order.push_back(r.corpus_name);
    Row& row = grouped[r.corpus_name][to_string(r.classifier)][to_string(r.stopword_mode)];
    const int col = r.feature_mode == FeatureMode::unigram ? 0 : 1;
    row.acc[col] = r.accuracy;
    row.time[col] = r.train_time_seconds;
    if (!r.error.empty()) row.error = r.error;
  }

  for (const std::string& corpus : corpus_order) {
    for (const auto& [classifier, rows] : grouped[corpus]) {
      out += "### " + corpus + " / " + classifier + "\n\n";
      out +=
          "| stopwords | unigram accuracy | unigram time (s) | bigram accuracy | "
          "bigram time (s) |\n";
      out += "|---|---|---|---|---|\n";
      for (StopwordMode mode : kAllStopwordModes) {
        const auto it = rows.find(to_string(mode));
        if (it == rows.end()) continue;
        const Row& row = it->second;
        if (!row.error.empty()) {
          out += "| " + to_string(mode) + " | error: " + row.error + " | | | |\n";
          continue;
        }
        out += "| " + to_string(mode) + " | " + fmt(row.acc[0], 4) + " | " +
               fmt(row.time[0], 3) + " | " + fmt(row.acc[1], 4) + " | " +
               fmt(row.time[1], 3) + " |\n";
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace arasent
