#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arasent/corpus.hpp"
#include "arasent/dtree.hpp"
#include "arasent/stopgen.hpp"

namespace arasent {

enum class Classifier { nb, dt };
enum class FeatureMode { unigram, bigram };
enum class StopwordMode { without, msa_lists, corpus_based, egyptian_general, all_lists };

std::string to_string(Classifier c);
std::string to_string(FeatureMode m);
std::string to_string(StopwordMode m);
StopwordMode stopword_mode_from_string(const std::string& s);

inline constexpr StopwordMode kAllStopwordModes[] = {
    StopwordMode::without, StopwordMode::msa_lists, StopwordMode::corpus_based,
    StopwordMode::egyptian_general, StopwordMode::all_lists};

struct SplitSpec {
  double train_fraction = 0.75;
  std::uint64_t seed = 0;
  bool exclude_neutral = true;
  bool stratify = false;
};

std::pair<std::vector<Document>, std::vector<Document>> split_corpus(
    const std::vector<Document>& docs, const SplitSpec& spec);

double accuracy(const std::vector<std::string>& predictions,
                const std::vector<std::string>& gold);

double measure_seconds(const std::function<void()>& fn);  // millisecond resolution

struct EvalResult {
  std::string corpus_name;
  Classifier classifier = Classifier::nb;
  FeatureMode feature_mode = FeatureMode::unigram;
  StopwordMode stopword_mode = StopwordMode::without;
  double accuracy = 0.0;
  double train_time_seconds = 0.0;
  std::string error;  // non-empty when this cell failed
};

struct NamedCorpus {
  std::string name;
  std::vector<Document> docs;
};

struct MatrixOptions {
  SplitSpec split;
  TrainParams dt_params;
  double nb_smoothing = 0.5;
  bool serial = false;  // disables parallel cells so timings stay meaningful
};

std::vector<EvalResult> run_matrix(const std::vector<NamedCorpus>& corpora,
                                   const std::map<StopwordMode, StopwordList>& lists,
                                   const MatrixOptions& options);

std::string results_to_csv(const std::vector<EvalResult>& results);
std::string results_to_markdown(const std::vector<EvalResult>& results);

}  // namespace arasent
