#include "arasent/features.hpp"

namespace arasent {

namespace {

bool is_feature_token(const Token& tok) {
  // punctuation, urls, mentions and numbers carry no sentiment signal;
  // emoticons do, so they count alongside words
  return tok.kind == TokenKind::word || tok.kind == TokenKind::emoticon;
}

std::vector<std::string> feature_texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& tok : tokens)
    if (is_feature_token(tok)) out.push_back(tok.text);
  return out;
}

}  // namespace

std::string bigram_feature(const std::string& first, const std::string& second) {
  std::string out = first;
  out += kBigramJoiner;
  out += second;
  return out;
}

FeatureSet extract_unigrams(const std::vector<Token>& tokens) {
  FeatureSet features;
  for (const Token& tok : tokens)
    if (is_feature_token(tok)) features.insert(tok.text);
  return features;
}

FeatureSet extract_bigrams(const std::vector<Token>& tokens) {
  const auto texts = feature_texts(tokens);
  FeatureSet features;
  for (std::size_t i = 0; i + 1 < texts.size(); ++i)
    features.insert(bigram_feature(texts[i], texts[i + 1]));
  return features;
}

}  // namespace arasent
