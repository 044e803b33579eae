#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "arasent/textkit.hpp"

namespace arasent {

// presence-only feature set; a bigram feature is "w1<U+241F>w2"
using FeatureSet = std::set<std::string>;

inline constexpr std::string_view kBigramJoiner = "\xE2\x90\x9F";  // U+241F

std::string bigram_feature(const std::string& first, const std::string& second);

FeatureSet extract_unigrams(const std::vector<Token>& tokens);
FeatureSet extract_bigrams(const std::vector<Token>& tokens);

}  // namespace arasent
