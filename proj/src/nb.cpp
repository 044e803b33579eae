#include "arasent/nb.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "arasent/errors.hpp"

namespace arasent {

namespace {

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

NBModel nb_train(const std::vector<LabeledExample>& examples, double smoothing) {
  if (smoothing <= 0.0) throw std::invalid_argument("smoothing must be positive");
  if (examples.empty()) throw DataError("cannot train on an empty example set");

  NBModel model;
  model.smoothing = smoothing;

  std::map<std::string, std::size_t> label_counts;
  std::map<std::string, std::map<std::string, std::size_t>> present;  // feature -> label
  for (const auto& [features, label] : examples) {
    ++label_counts[label];
    for (const std::string& f : features) ++present[f][label];
  }
  if (label_counts.size() < 2)
    throw DataError("training set has a single label; the classifier would be degenerate");

  const double n = static_cast<double>(examples.size());
  for (const auto& [label, count] : label_counts) {
    model.labels.insert(label);
    model.prior[label] = static_cast<double>(count) / n;
  }
  for (const auto& [feature, per_label] : present) {
    model.vocabulary.insert(feature);
    for (const auto& [label, count] : label_counts) {
      const auto it = per_label.find(label);
      const double seen = it == per_label.end() ? 0.0 : static_cast<double>(it->second);
      model.cond[feature][label] =
          (seen + smoothing) / (static_cast<double>(count) + 2.0 * smoothing);
    }
  }
  return model;
}

Prediction nb_predict(const NBModel& model, const FeatureSet& features) {
  if (model.labels.empty()) throw std::invalid_argument("model is not trained");

  std::map<std::string, double> score;
  for (const std::string& label : model.labels) {
    double s = std::log(model.prior.at(label));
    for (const auto& [feature, per_label] : model.cond) {
      const double p = per_label.at(label);
      s += features.count(feature) ? std::log(p) : std::log1p(-p);
    }
    score[label] = s;
  }

  double max_score = score.begin()->second;
  for (const auto& [label, s] : score) max_score = std::max(max_score, s);

  Prediction out;
  double norm = 0.0;
  for (const auto& [label, s] : score) {
    const double e = std::exp(s - max_score);
    out.posterior[label] = e;
    norm += e;
  }
  for (auto& [label, p] : out.posterior) p /= norm;

  // maps iterate in label order, so keeping strict winners breaks ties
  // toward the lexicographically smallest label
  double best = -1.0;
  for (const auto& [label, p] : out.posterior) {
    if (p > best) {
      best = p;
      out.label = label;
    }
  }
  return out;
}

std::string NBModel::dump() const {
  std::string out = "naive_bayes smoothing=" + fmt(smoothing) + "\n";
  out += "labels:";
  for (const std::string& label : labels) out += " " + label;
  out += "\n";
  for (const auto& [label, p] : prior) out += "prior " + label + " " + fmt(p) + "\n";
  for (const auto& [feature, per_label] : cond)
    for (const auto& [label, p] : per_label)
      out += "cond " + feature + " " + label + " " + fmt(p) + "\n";
  return out;
}

}  // namespace arasent
