#include "arasent/dtree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "arasent/errors.hpp"

namespace arasent {

void TrainParams::validate() const {
  if (!(entropy_cutoff >= 0.0 && entropy_cutoff <= 1.0))
    throw std::invalid_argument("entropy_cutoff must be in [0,1]");
  if (depth_cutoff <= 0) throw std::invalid_argument("depth_cutoff must be positive");
  if (support_cutoff <= 0) throw std::invalid_argument("support_cutoff must be positive");
}

double entropy(const std::vector<double>& distribution) {
  double h = 0.0;
  for (double p : distribution) {
    if (p < 0.0) throw std::invalid_argument("negative probability in distribution");
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

namespace {

constexpr double kGainEpsilon = 1e-12;

double counts_entropy(const std::map<std::string, std::size_t>& counts, std::size_t total) {
  if (total == 0) return 0.0;
  std::vector<double> dist;
  dist.reserve(counts.size());
  for (const auto& [label, c] : counts)
    dist.push_back(static_cast<double>(c) / static_cast<double>(total));
  return entropy(dist);
}

std::string majority_label(const std::map<std::string, std::size_t>& counts) {
  std::string best;
  std::size_t best_count = 0;
  for (const auto& [label, c] : counts) {
    if (c > best_count) {  // map order makes ties go to the smallest label
      best_count = c;
      best = label;
    }
  }
  return best;
}

struct Builder {
  const std::vector<LabeledExample>& examples;
  const TrainParams& params;

  std::unique_ptr<DTNode> build(const std::vector<std::size_t>& idx, int depth) {
    auto node = std::make_unique<DTNode>();
    for (std::size_t i : idx) ++node->counts[examples[i].second];
    const double node_entropy = counts_entropy(node->counts, idx.size());

    const auto leaf = [&](const char* reason) {
      node->label = majority_label(node->counts);
      node->halt_reason = reason;
      return std::move(node);
    };

    if (node_entropy <= params.entropy_cutoff) return leaf("entropy");
    if (depth >= params.depth_cutoff) return leaf("depth");
    if (idx.size() <= static_cast<std::size_t>(params.support_cutoff))
      return leaf("support");

    std::set<std::string> candidates;
    for (std::size_t i : idx)
      candidates.insert(examples[i].first.begin(), examples[i].first.end());

    std::string best_feature;
    double best_gain = 0.0;
    for (const std::string& f : candidates) {
      std::map<std::string, std::size_t> with, without;
      std::size_t n_with = 0, n_without = 0;
      for (std::size_t i : idx) {
        if (examples[i].first.count(f)) {
          ++with[examples[i].second];
          ++n_with;
        } else {
          ++without[examples[i].second];
          ++n_without;
        }
      }
      const double n = static_cast<double>(idx.size());
      const double split_entropy =
          (static_cast<double>(n_with) / n) * counts_entropy(with, n_with) +
          (static_cast<double>(n_without) / n) * counts_entropy(without, n_without);
      const double gain = node_entropy - split_entropy;
      if (gain > best_gain + kGainEpsilon) {  // set order keeps the first among ties
        best_gain = gain;
        best_feature = f;
      }
    }
    if (best_feature.empty()) return leaf("no_gain");

    std::vector<std::size_t> with_idx, without_idx;
    for (std::size_t i : idx) {
      if (examples[i].first.count(best_feature))
        with_idx.push_back(i);
      else
        without_idx.push_back(i);
    }
    node->feature = best_feature;
    node->present = build(with_idx, depth + 1);
    node->absent = build(without_idx, depth + 1);
    return node;
  }
};

}  // namespace

std::size_t DTNode::support() const {
  std::size_t n = 0;
  for (const auto& [label, c] : counts) n += c;
  return n;
}

int DTNode::depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(present->depth(), absent->depth());
}

double DTNode::label_entropy() const { return counts_entropy(counts, support()); }

DTModel dt_train(const std::vector<LabeledExample>& examples, TrainParams params) {
  params.validate();
  if (examples.empty()) throw DataError("cannot train on an empty example set");

  std::vector<std::size_t> idx(examples.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

  DTModel model;
  model.params = params;
  model.root = Builder{examples, params}.build(idx, 0);
  return model;
}

std::string dt_predict(const DTModel& model, const FeatureSet& features) {
  if (!model.root) throw std::invalid_argument("model is not trained");
  const DTNode* node = model.root.get();
  while (!node->is_leaf())
    node = features.count(node->feature) ? node->present.get() : node->absent.get();
  return node->label;
}

namespace {

void dump_node(const DTNode& node, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (node.is_leaf()) {
    out += pad + "leaf " + node.label + " reason=" + node.halt_reason + " counts{";
    bool first = true;
    for (const auto& [label, c] : node.counts) {
      if (!first) out += " ";
      first = false;
      out += label + ":" + std::to_string(c);
    }
    out += "}\n";
    return;
  }
  out += pad + "split " + node.feature + "\n";
  out += pad + "present:\n";
  dump_node(*node.present, indent + 1, out);
  out += pad + "absent:\n";
  dump_node(*node.absent, indent + 1, out);
}

}  // namespace

std::string DTModel::dump() const {
  char header[128];
  std::snprintf(header, sizeof(header),
                "decision_tree entropy_cutoff=%.2f depth_cutoff=%d support_cutoff=%d\n",
                params.entropy_cutoff, params.depth_cutoff, params.support_cutoff);
  std::string out = header;
  if (root) dump_node(*root, 0, out);
  return out;
}

}  // namespace arasent
