#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "arasent/dtree.hpp"
#include "arasent/errors.hpp"
#include "arasent/features.hpp"
#include "arasent/nb.hpp"

using namespace arasent;

namespace {

Token word(const std::string& text) { return {text, TokenKind::word}; }

std::vector<LabeledExample> spam_fixture() {
  return {
      {{"f"}, "pos"},
      {{"f"}, "pos"},
      {{}, "neg"},
      {{"g"}, "neg"},
  };
}

// direct evaluation of the scoring formula, written independently of nb.cpp
std::map<std::string, double> oracle_posterior(const std::vector<LabeledExample>& train,
                                               const FeatureSet& input, double s) {
  std::map<std::string, std::size_t> label_counts;
  std::set<std::string> vocab;
  for (const auto& [features, label] : train) {
    ++label_counts[label];
    vocab.insert(features.begin(), features.end());
  }

  std::map<std::string, double> log_score;
  for (const auto& [label, count] : label_counts) {
    double score = std::log(static_cast<double>(count) / train.size());
    for (const std::string& f : vocab) {
      std::size_t seen = 0;
      for (const auto& [features, l] : train)
        if (l == label && features.count(f)) ++seen;
      const double p = (seen + s) / (count + 2.0 * s);
      score += input.count(f) ? std::log(p) : std::log(1.0 - p);
    }
    log_score[label] = score;
  }

  double max_score = log_score.begin()->second;
  for (const auto& [l, sc] : log_score) max_score = std::max(max_score, sc);
  double norm = 0.0;
  std::map<std::string, double> posterior;
  for (const auto& [l, sc] : log_score) {
    posterior[l] = std::exp(sc - max_score);
    norm += posterior[l];
  }
  for (auto& [l, p] : posterior) p /= norm;
  return posterior;
}

}  // namespace

TEST_CASE("unigram features collapse duplicates and keep only words and emoticons") {
  CHECK(extract_unigrams({word("جيد"), word("جيد"), word("جدا")}) ==
        FeatureSet{"جيد", "جدا"});
  CHECK(extract_unigrams({}).empty());
  CHECK(extract_unigrams({{"!", TokenKind::punctuation}, {"?", TokenKind::punctuation}})
            .empty());
  CHECK(extract_unigrams({{"@a", TokenKind::mention},
                          {"http://x", TokenKind::url},
                          {"5", TokenKind::number},
                          {"#t", TokenKind::hashtag},
                          {":D", TokenKind::emoticon},
                          word("جيد")}) == FeatureSet{":D", "جيد"});
}

TEST_CASE("bigram features pair adjacent word-like tokens") {
  CHECK(extract_bigrams({word("فيلم"), word("جميل"), word("جدا")}) ==
        FeatureSet{bigram_feature("فيلم", "جميل"), bigram_feature("جميل", "جدا")});
  CHECK(extract_bigrams({word("فيلم")}).empty());
  CHECK(extract_bigrams({word("a"), word("b"), word("a"), word("b")}) ==
        FeatureSet{bigram_feature("a", "b"), bigram_feature("b", "a")});
}

TEST_CASE("the bigram joiner cannot collide with token text") {
  CHECK(bigram_feature("a", "b") == "a\xE2\x90\x9F" "b");
}

TEST_CASE("feature extraction matches a brute-force enumeration") {
  const std::vector<std::vector<Token>> fixtures = {
      {},
      {word("a")},
      {word("a"), {"!", TokenKind::punctuation}, word("b"), word("a")},
      {{"@x", TokenKind::mention}, word("فيلم"), {":D", TokenKind::emoticon},
       word("جميل"), {"http://u", TokenKind::url}, word("فيلم")},
  };
  for (const auto& tokens : fixtures) {
    std::vector<std::string> texts;
    for (const auto& t : tokens)
      if (t.kind == TokenKind::word || t.kind == TokenKind::emoticon)
        texts.push_back(t.text);

    FeatureSet uni(texts.begin(), texts.end());
    FeatureSet bi;
    for (std::size_t i = 0; i + 1 < texts.size(); ++i)
      bi.insert(texts[i] + std::string(kBigramJoiner) + texts[i + 1]);

    CHECK(extract_unigrams(tokens) == uni);
    CHECK(extract_bigrams(tokens) == bi);
  }
}

TEST_CASE("nb priors come from label frequencies") {
  const auto model = nb_train(spam_fixture(), 0.5);
  CHECK(model.prior.at("pos") == 0.5);
  CHECK(model.prior.at("neg") == 0.5);

  double sum = 0.0;
  for (const auto& [label, p] : model.prior) sum += p;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("nb conditional arithmetic with symmetric smoothing") {
  const auto model = nb_train(spam_fixture(), 0.5);
  // f appears in 2 of 2 pos examples
  CHECK(model.cond.at("f").at("pos") == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  // g never appears with pos
  CHECK(model.cond.at("g").at("pos") == doctest::Approx(0.5 / 3.0).epsilon(1e-12));

  const std::vector<LabeledExample> three_pos = {
      {{"f"}, "pos"}, {{"f"}, "pos"}, {{"f"}, "pos"}, {{"g"}, "neg"}};
  const auto m2 = nb_train(three_pos, 0.5);
  CHECK(m2.cond.at("g").at("pos") == 0.125);  // (0 + 0.5) / (3 + 1)
}

TEST_CASE("nb conditionals stay strictly inside (0,1)") {
  const auto model = nb_train(spam_fixture(), 0.5);
  for (const auto& [feature, per_label] : model.cond)
    for (const auto& [label, p] : per_label) {
      CHECK(p > 0.0);
      CHECK(p < 1.0);
    }
  CHECK(model.vocabulary == std::set<std::string>{"f", "g"});
}

TEST_CASE("nb training rejects degenerate input") {
  CHECK_THROWS_AS(nb_train({}, 0.5), DataError);
  CHECK_THROWS_AS(nb_train({{{"f"}, "pos"}, {{"g"}, "pos"}}, 0.5), DataError);
  CHECK_THROWS_AS(nb_train(spam_fixture(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(nb_train(spam_fixture(), -1.0), std::invalid_argument);
}

TEST_CASE("symmetric model with empty input ties toward the smaller label") {
  const std::vector<LabeledExample> sym = {{{"f"}, "pos"}, {{"g"}, "neg"},
                                           {{"f"}, "neg"}, {{"g"}, "pos"}};
  const auto model = nb_train(sym, 0.5);
  const auto p = nb_predict(model, {});
  CHECK(p.posterior.at("pos") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p.posterior.at("neg") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p.label == "neg");
}

TEST_CASE("posteriors sum to one") {
  const auto model = nb_train(spam_fixture(), 0.5);
  for (const FeatureSet& input :
       {FeatureSet{}, FeatureSet{"f"}, FeatureSet{"g"}, FeatureSet{"f", "g"}}) {
    const auto p = nb_predict(model, input);
    double sum = 0.0;
    for (const auto& [label, prob] : p.posterior) sum += prob;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("features outside the vocabulary are ignored") {
  const auto model = nb_train(spam_fixture(), 0.5);
  const auto base = nb_predict(model, {"f"});
  const auto noisy = nb_predict(model, {"f", "never_seen", "also_unseen"});
  CHECK(base.label == noisy.label);
  CHECK(base.posterior.at("pos") == noisy.posterior.at("pos"));
}

TEST_CASE("four document fixture matches the brute-force oracle") {
  const auto train = spam_fixture();
  const auto model = nb_train(train, 0.5);
  for (const FeatureSet& input :
       {FeatureSet{}, FeatureSet{"f"}, FeatureSet{"g"}, FeatureSet{"f", "g"}}) {
    const auto expected = oracle_posterior(train, input, 0.5);
    const auto got = nb_predict(model, input);
    for (const auto& [label, p] : expected) {
      CAPTURE(label);
      CHECK(got.posterior.at(label) == doctest::Approx(p).epsilon(1e-9));
    }
  }
}

TEST_CASE("training order never changes nb parameters") {
  std::vector<LabeledExample> train = {
      {{"a", "b"}, "pos"}, {{"b"}, "pos"}, {{"c"}, "neg"},
      {{"a", "c"}, "neg"}, {{}, "pos"},    {{"b", "c"}, "neg"}};
  const std::string reference = nb_train(train, 0.5).dump();
  std::mt19937 rng(7);
  for (int round = 0; round < 10; ++round) {
    std::shuffle(train.begin(), train.end(), rng);
    CHECK(nb_train(train, 0.5).dump() == reference);
  }
}

TEST_CASE("nb dump is a stable text rendering") {
  CHECK(nb_train(spam_fixture(), 0.5).dump() ==
        "naive_bayes smoothing=0.500000\n"
        "labels: neg pos\n"
        "prior neg 0.500000\n"
        "prior pos 0.500000\n"
        "cond f neg 0.166667\n"
        "cond f pos 0.833333\n"
        "cond g neg 0.500000\n"
        "cond g pos 0.166667\n");
}

TEST_CASE("entropy reference values") {
  CHECK(entropy({0.5, 0.5}) == 1.0);
  CHECK(entropy({1.0, 0.0}) == 0.0);
  CHECK(entropy({0.75, 0.25}) == doctest::Approx(0.811278).epsilon(1e-6));
  CHECK(entropy({}) == 0.0);
  CHECK_THROWS_AS(entropy({-0.1, 1.1}), std::invalid_argument);
}

TEST_CASE("train params validation") {
  CHECK_NOTHROW(TrainParams{}.validate());
  CHECK_THROWS_AS((TrainParams{1.5, 5, 30}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((TrainParams{0.8, 0, 30}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((TrainParams{0.8, 5, 0}).validate(), std::invalid_argument);
}

TEST_CASE("thirty examples halt on the support cutoff") {
  std::vector<LabeledExample> train;
  for (int i = 0; i < 15; ++i) train.push_back({{"f"}, "pos"});
  for (int i = 0; i < 15; ++i) train.push_back({{"g"}, "neg"});
  const auto model = dt_train(train);  // defaults: 0.8 / 5 / 30
  REQUIRE(model.root != nullptr);
  CHECK(model.root->is_leaf());
  CHECK(model.root->halt_reason == "support");
  CHECK(model.root->support() == 30);
}

TEST_CASE("uniform labels halt on entropy immediately") {
  std::vector<LabeledExample> train(100, {{"f"}, "pos"});
  const auto model = dt_train(train);
  REQUIRE(model.root->is_leaf());
  CHECK(model.root->halt_reason == "entropy");
  CHECK(model.root->label == "pos");
  CHECK(model.root->label_entropy() == 0.0);
}

TEST_CASE("perfectly separable data builds a depth-one tree with pure leaves") {
  std::vector<LabeledExample> train;
  for (int i = 0; i < 20; ++i) train.push_back({{"f"}, "pos"});
  for (int i = 0; i < 20; ++i) train.push_back({{}, "neg"});
  const auto model = dt_train(train, {0.1, 5, 30});

  REQUIRE(!model.root->is_leaf());
  CHECK(model.root->feature == "f");
  CHECK(model.root->depth() == 1);
  REQUIRE(model.root->present->is_leaf());
  REQUIRE(model.root->absent->is_leaf());
  CHECK(model.root->present->label == "pos");
  CHECK(model.root->absent->label == "neg");
  CHECK(model.root->present->label_entropy() == 0.0);
  CHECK(model.root->absent->label_entropy() == 0.0);
}

TEST_CASE("equal gain splits choose the lexicographically first feature") {
  std::vector<LabeledExample> train;
  for (int i = 0; i < 20; ++i) train.push_back({{"x", "b"}, "pos"});
  for (int i = 0; i < 20; ++i) train.push_back({{}, "neg"});
  const auto model = dt_train(train, {0.1, 5, 10});
  REQUIRE(!model.root->is_leaf());
  CHECK(model.root->feature == "b");
}

TEST_CASE("no positive gain halts even when entropy stays high") {
  // the single feature is split evenly across both labels, so it cannot help
  std::vector<LabeledExample> train;
  for (int i = 0; i < 20; ++i) train.push_back({{"f"}, i % 2 ? "pos" : "neg"});
  for (int i = 0; i < 20; ++i) train.push_back({{}, i % 2 ? "pos" : "neg"});
  const auto model = dt_train(train, {0.1, 5, 10});
  REQUIRE(model.root->is_leaf());
  CHECK(model.root->halt_reason == "no_gain");
}

TEST_CASE("depth cutoff caps recursion") {
  // nested features force one extra split per level until depth runs out
  std::vector<LabeledExample> train;
  const std::vector<std::string> chain = {"a", "b", "c", "d", "e", "f", "g"};
  FeatureSet acc;
  std::string label = "pos";
  for (const auto& f : chain) {
    acc.insert(f);
    for (int i = 0; i < 3; ++i) train.push_back({acc, label});
    label = label == "pos" ? "neg" : "pos";
  }
  const auto model = dt_train(train, {0.1, 3, 1});
  CHECK(model.root->depth() <= 3);
}

TEST_CASE("prediction follows present and absent branches") {
  std::vector<LabeledExample> train;
  for (int i = 0; i < 2; ++i) train.push_back({{"a", "b"}, "p"});
  for (int i = 0; i < 2; ++i) train.push_back({{"a"}, "q"});
  for (int i = 0; i < 2; ++i) train.push_back({{"b"}, "q"});
  const auto model = dt_train(train, {0.1, 5, 1});

  // hand trace: root tests a; its present branch tests b
  REQUIRE(!model.root->is_leaf());
  CHECK(model.root->feature == "a");
  REQUIRE(!model.root->present->is_leaf());
  CHECK(model.root->present->feature == "b");

  CHECK(dt_predict(model, {"a", "b"}) == "p");
  CHECK(dt_predict(model, {"a"}) == "q");
  CHECK(dt_predict(model, {"b"}) == "q");
  CHECK(dt_predict(model, {}) == "q");

  // single-leaf model answers the same label for anything
  const auto leaf_model = dt_train({{{"f"}, "pos"}, {{}, "pos"}});
  CHECK(dt_predict(leaf_model, {"f"}) == "pos");
  CHECK(dt_predict(leaf_model, {"zzz"}) == "pos");
}

TEST_CASE("training order never changes the tree") {
  std::vector<LabeledExample> train;
  for (int i = 0; i < 12; ++i) train.push_back({{"a", "b"}, "pos"});
  for (int i = 0; i < 12; ++i) train.push_back({{"a"}, "neg"});
  for (int i = 0; i < 12; ++i) train.push_back({{"c"}, "pos"});
  for (int i = 0; i < 12; ++i) train.push_back({{}, "neg"});
  const std::string reference = dt_train(train, {0.1, 5, 5}).dump();
  std::mt19937 rng(11);
  for (int round = 0; round < 10; ++round) {
    std::shuffle(train.begin(), train.end(), rng);
    CHECK(dt_train(train, {0.1, 5, 5}).dump() == reference);
  }
}

TEST_CASE("dt training rejects empty input") {
  CHECK_THROWS_AS(dt_train({}), DataError);
}

TEST_CASE("dt dump is a stable text rendering") {
  std::vector<LabeledExample> train = {{{"f"}, "x"}, {{"f"}, "x"}, {{}, "y"}, {{}, "y"}};
  CHECK(dt_train(train, {0.1, 5, 1}).dump() ==
        "decision_tree entropy_cutoff=0.10 depth_cutoff=5 support_cutoff=1\n"
        "split f\n"
        "present:\n"
        "  leaf x reason=entropy counts{x:2}\n"
        "absent:\n"
        "  leaf y reason=entropy counts{y:2}\n");
}

TEST_CASE("every leaf of a random tree satisfies a halting condition") {
  std::mt19937 rng(42);
  for (int round = 0; round < 50; ++round) {
    std::vector<LabeledExample> train;
    const int n = 2 + static_cast<int>(rng() % 120);
    for (int i = 0; i < n; ++i) {
      FeatureSet fs;
      for (const std::string f : {"a", "b", "c", "d"})
        if (rng() % 2) fs.insert(f);
      train.push_back({fs, rng() % 2 ? "pos" : "neg"});
    }
    const auto model = dt_train(train);
    CHECK(model.root->depth() <= model.params.depth_cutoff);

    const auto walk = [&](const auto& self, const DTNode& node, int depth) -> void {
      if (!node.is_leaf()) {
        self(self, *node.present, depth + 1);
        self(self, *node.absent, depth + 1);
        return;
      }
      const bool ok = node.label_entropy() <= model.params.entropy_cutoff + 1e-9 ||
                      depth >= model.params.depth_cutoff ||
                      node.support() <= static_cast<std::size_t>(model.params.support_cutoff) ||
                      node.halt_reason == "no_gain";
      CHECK(ok);
    };
    walk(walk, *model.root, 0);
  }
}
