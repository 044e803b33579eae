#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "arasent/nb.hpp"

namespace arasent {

struct TrainParams {
  double entropy_cutoff = 0.8;
  int depth_cutoff = 5;
  int support_cutoff = 30;

  void validate() const;
};

double entropy(const std::vector<double>& distribution);

struct DTNode {
  std::map<std::string, std::size_t> counts;  // label distribution at this node

  // leaf fields
  std::string label;
  std::string halt_reason;  // entropy | depth | support | no_gain; empty on splits

  // split fields
  std::string feature;
  std::unique_ptr<DTNode> present;
  std::unique_ptr<DTNode> absent;

  bool is_leaf() const { return present == nullptr; }
  std::size_t support() const;
  int depth() const;  // edges on the longest root-to-leaf path of this subtree
  double label_entropy() const;
};

struct DTModel {
  std::unique_ptr<DTNode> root;
  TrainParams params;

  std::string dump() const;
};

DTModel dt_train(const std::vector<LabeledExample>& examples, TrainParams params = {});
std::string dt_predict(const DTModel& model, const FeatureSet& features);

}  // namespace arasent
