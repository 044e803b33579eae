#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arasent/dtree.hpp"
#include "arasent/errors.hpp"
#include "arasent/eval.hpp"
#include "arasent/features.hpp"
#include "arasent/nb.hpp"
#include "arasent/pipeline.hpp"
#include "arasent/stopgen.hpp"
#include "arasent/textkit.hpp"
#include "arasent/translit.hpp"

namespace py = pybind11;

namespace {

using namespace arasent;

using PyToken = std::pair<std::string, std::string>;
using PyRules = std::vector<std::pair<std::string, std::vector<std::string>>>;

TranslitRules make_rules(const PyRules& rules) {
  TranslitRules out;
  for (const auto& [latin, alternatives] : rules) out.add(latin, alternatives);
  out.sort_rules();
  return out;
}

FrequencyTable make_lexicon(const std::map<std::string, std::uint64_t>& counts) {
  FrequencyTable table;
  for (const auto& [word, count] : counts) {
    if (count == 0) continue;
    table.entries[word] = count;
    table.total_tokens += count;
  }
  return table;
}

std::vector<Token> make_tokens(const std::vector<PyToken>& tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const auto& [text, kind] : tokens)
    out.push_back({text, token_kind_from_string(kind)});
  return out;
}

std::vector<PyToken> to_py_tokens(const std::vector<Token>& tokens) {
  std::vector<PyToken> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.emplace_back(t.text, std::string(to_string(t.kind)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Arabic social-network sentiment corpus toolkit";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  m.def(
      "tokenize",
      [](const std::string& text, const std::vector<std::string>& emoticons) {
        const EmoticonLexicon lexicon = emoticons.empty()
                                            ? EmoticonLexicon()
                                            : EmoticonLexicon::from_entries(emoticons);
        return to_py_tokens(tokenize(text, lexicon));
      },
      py::arg("text"), py::arg("emoticons") = std::vector<std::string>{},
      "Split text into (text, kind) tokens; kinds: word, emoticon, punctuation, "
      "number, mention, url, hashtag.");

  m.def(
      "arabic_script_ratio",
      [](const std::string& text) { return arabic_script_ratio(text); },
      py::arg("text"));

  m.def(
      "letter_variants",
      [](const std::string& word) { return letter_variants(word, VariantTable::standard()); },
      py::arg("word"), "Spellings reachable through the standard letter-variant groups.");

  m.def(
      "normalize_for_match",
      [](const std::string& word) {
        return normalize_for_match(word, VariantTable::standard());
      },
      py::arg("word"));

  m.def(
      "hashtag_segments",
      [](const std::string& hashtag) { return hashtag_segments(hashtag); },
      py::arg("hashtag"));

  m.def(
      "franco_candidates",
      [](const std::string& word, const PyRules& rules) {
        return franco_candidates(word, make_rules(rules));
      },
      py::arg("word"), py::arg("rules"),
      "Arabic spellings a Latin-script word can map to under the rule table; "
      "rules are (latin, [alternatives]) pairs, empty alternative means elision.");

  m.def(
      "transliterate",
      [](const std::string& text, const PyRules& rules,
         const std::map<std::string, std::uint64_t>& lexicon,
         const std::map<std::string, std::string>& overrides) {
        const TranslitResult r =
            transliterate_franco(text, make_rules(rules), make_lexicon(lexicon), overrides);
        return std::make_pair(r.text, r.unresolved);
      },
      py::arg("text"), py::arg("rules"),
      py::arg("lexicon") = std::map<std::string, std::uint64_t>{},
      py::arg("overrides") = std::map<std::string, std::string>{},
      "Rewrite Franco-Arab words to Arabic; returns (text, unresolved_words).");

  m.def(
      "replace_abbreviations",
      [](const std::string& text, const std::map<std::string, std::string>& mapping) {
        return replace_abbreviations(text, mapping);
      },
      py::arg("text"), py::arg("mapping"));

  m.def(
      "translate_english",
      [](const std::string& text, const std::map<std::string, std::string>& gloss) {
        const TranslationResult r = translate_english_tokens(text, gloss);
        return std::make_pair(r.text, r.unresolved);
      },
      py::arg("text"), py::arg("gloss"),
      "Replace English tokens by their Arabic gloss; returns (text, unresolved).");

  m.def(
      "annotate_by_rating",
      [](int rating) { return std::string(to_string(annotate_by_rating(rating))); },
      py::arg("rating"), "Map a 1..10 site rating to positive/negative/neutral.");

  m.def(
      "expand_morphology",
      [](const std::string& word, const std::vector<std::string>& prefixes,
         const std::vector<std::string>& suffixes, bool suffixable,
         const std::set<std::string>& exclusions) {
        MorphRules rules;
        rules.prefixes = prefixes;
        rules.pronoun_suffixes = suffixes;
        rules.variant_table = VariantTable::standard();
        rules.exclusions = exclusions;
        return expand_morphology(word, rules, suffixable);
      },
      py::arg("word"), py::arg("prefixes"), py::arg("suffixes") = std::vector<std::string>{},
      py::arg("suffixable") = false, py::arg("exclusions") = std::set<std::string>{});

  m.def(
      "remove_stopwords",
      [](const std::vector<PyToken>& tokens, const std::set<std::string>& words) {
        StopwordList list;
        list.name = "inline";
        list.kind = ListKind::combined;
        list.words = words;
        return to_py_tokens(remove_stopwords(make_tokens(tokens), list));
      },
      py::arg("tokens"), py::arg("words"));

  m.def(
      "extract_unigrams",
      [](const std::vector<PyToken>& tokens) {
        return extract_unigrams(make_tokens(tokens));
      },
      py::arg("tokens"));

  m.def(
      "extract_bigrams",
      [](const std::vector<PyToken>& tokens) { return extract_bigrams(make_tokens(tokens)); },
      py::arg("tokens"));

  m.def("entropy", &entropy, py::arg("distribution"),
        "Shannon entropy in bits; rejects negative probabilities.");

  m.def("accuracy", &accuracy, py::arg("predictions"), py::arg("gold"));

  py::class_<NBModel>(m, "NBModel")
      .def_readonly("smoothing", &NBModel::smoothing)
      .def_readonly("vocabulary", &NBModel::vocabulary)
      .def_readonly("prior", &NBModel::prior)
      .def(
          "predict",
          [](const NBModel& model, const FeatureSet& features) {
            const Prediction p = nb_predict(model, features);
            return std::make_pair(p.label, p.posterior);
          },
          py::arg("features"), "Returns (label, posterior_by_label).")
      .def("dump", &NBModel::dump);

  m.def(
      "nb_train",
      [](const std::vector<LabeledExample>& examples, double smoothing) {
        return nb_train(examples, smoothing);
      },
      py::arg("examples"), py::arg("smoothing") = 0.5,
      "Train a Bernoulli model on (feature_set, label) pairs.");

  py::class_<DTModel>(m, "DTModel")
      .def_property_readonly("depth", [](const DTModel& model) { return model.root->depth(); })
      .def(
          "predict",
          [](const DTModel& model, const FeatureSet& features) {
            return dt_predict(model, features);
          },
          py::arg("features"))
      .def("dump", &DTModel::dump);

  m.def(
      "dt_train",
      [](const std::vector<LabeledExample>& examples, double entropy_cutoff,
         int depth_cutoff, int support_cutoff) {
        TrainParams params;
        params.entropy_cutoff = entropy_cutoff;
        params.depth_cutoff = depth_cutoff;
        params.support_cutoff = support_cutoff;
        return dt_train(examples, params);
      },
      py::arg("examples"), py::arg("entropy_cutoff") = 0.8, py::arg("depth_cutoff") = 5,
      py::arg("support_cutoff") = 30);
}
