#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arasent/features.hpp"

namespace arasent {

using LabeledExample = std::pair<FeatureSet, std::string>;

// Bernoulli presence model: absent vocabulary features contribute log(1 - p)
struct NBModel {
  std::set<std::string> labels;
  std::map<std::string, double> prior;
  std::map<std::string, std::map<std::string, double>> cond;  // feature -> label -> p
  std::set<std::string> vocabulary;
  double smoothing = 0.5;

  std::string dump() const;
};

struct Prediction {
  std::string label;
  std::map<std::string, double> posterior;
};

NBModel nb_train(const std::vector<LabeledExample>& examples, double smoothing = 0.5);
Prediction nb_predict(const NBModel& model, const FeatureSet& features);

}  // namespace arasent
