#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "arasent/corpus.hpp"
#include "arasent/errors.hpp"
#include "arasent/eval.hpp"
#include "arasent/features.hpp"
#include "arasent/pipeline.hpp"
#include "arasent/resources.hpp"
#include "arasent/stopgen.hpp"
#include "arasent/translit.hpp"

namespace {

using namespace arasent;

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    write_file_atomic(path, content);
}

struct PrepareArgs {
  std::string in, source, out, report;
  std::string topic_words, spam_phrases, abbrev, translit_rules, translit_overrides;
  std::string translit_lexicon, gloss, emoticons;
};

void run_prepare(const PrepareArgs& args) {
  PipelineConfig config;
  if (!args.topic_words.empty()) config.topic_words = load_wordlist(args.topic_words);
  if (!args.spam_phrases.empty()) config.spam_phrases = load_phraselist(args.spam_phrases);
  if (!args.abbrev.empty()) config.abbreviations = load_tsv_map(args.abbrev);
  if (!args.translit_rules.empty())
    config.translit_rules = TranslitRules::load(args.translit_rules);
  if (!args.translit_overrides.empty())
    config.translit_overrides = load_tsv_map(args.translit_overrides);
  if (!args.translit_lexicon.empty())
    config.translit_lexicon = FrequencyTable::load(args.translit_lexicon);
  if (!args.gloss.empty()) config.gloss = load_tsv_map(args.gloss);
  if (!args.emoticons.empty()) config.emoticons = EmoticonLexicon::load(args.emoticons);

  const IngestResult ingested = ingest(args.in, source_from_string(args.source));
  for (const std::string& d : ingested.diagnostics) std::cerr << d << "\n";

  const PipelineResult result = run_pipeline(ingested.posts, config);
  for (const std::string& d : result.diagnostics) std::cerr << d << "\n";

  emit(args.out, documents_to_jsonl(result.documents));
  if (!args.report.empty()) write_file_atomic(args.report, result.report.to_csv());
}

struct StopgenArgs {
  std::vector<std::string> corpora;
  std::string mode = "corpus-based";
  std::size_t k = 200;
  std::string candidates;
  std::vector<std::string> msa_lists;
  std::string english_stoplist;
  std::string rules;
  std::string out;
};

void run_stopgen(const StopgenArgs& args) {
  std::vector<std::vector<Document>> corpora;
  for (const std::string& path : args.corpora)
    corpora.push_back(documents_from_jsonl(path));
  const FrequencyTable table = build_frequency_table(corpora);
  const MorphRules rules = MorphRules::load(args.rules);

  const auto egyptian_list = [&]() -> StopwordList {
    if (args.candidates.empty() || args.msa_lists.empty() || args.english_stoplist.empty())
      throw CLI::ValidationError(
          "stopgen",
          "--candidates, --msa-lists and --english-stoplist are required for mode \"" +
              args.mode + "\"");
    std::set<std::string> msa;
    for (const std::string& path : args.msa_lists) {
      const auto words = load_wordlist(path);
      msa.insert(words.begin(), words.end());
    }
    const std::set<std::string> english = load_wordlist(args.english_stoplist);
    std::vector<CandidateWord> candidates = load_candidates(args.candidates);
    resolve_verdicts(candidates, msa, english);
    EgyptianGenResult result = generate_egyptian_general(table, candidates, rules, args.k);
    for (const std::string& w : result.needs_review)
      std::cerr << "needs review: " << w << "\n";
    for (const std::string& w : result.content_words)
      std::cerr << "excluded content word: " << w << "\n";
    return std::move(result.list);
  };

  StopwordList list;
  if (args.mode == "corpus-based") {
    list = generate_corpus_based(table, rules, args.k);
  } else if (args.mode == "egyptian") {
    list = egyptian_list();
  } else {  // combined
    list = combine_lists(generate_corpus_based(table, rules, args.k), egyptian_list());
  }
  list.save(args.out);
}

struct ClassifyArgs {
  std::string train;
  std::string classifier = "nb";
  std::string features = "unigram";
  std::string stopwords;
  std::string dump;
  std::string predict;
  std::string out;
  double smoothing = 0.5;
  TrainParams dt_params;
};

void run_classify(const ClassifyArgs& args) {
  const std::vector<Document> train_docs = documents_from_jsonl(args.train);
  StopwordList list;
  const bool filter = !args.stopwords.empty();
  if (filter) list = StopwordList::load(args.stopwords, ListKind::combined);

  const FeatureMode mode =
      args.features == "unigram" ? FeatureMode::unigram : FeatureMode::bigram;
  const auto featurize_doc = [&](const Document& doc) {
    const std::vector<Token> tokens =
        filter ? remove_stopwords(doc.tokens, list) : doc.tokens;
    return mode == FeatureMode::unigram ? extract_unigrams(tokens)
                                        : extract_bigrams(tokens);
  };

  std::vector<LabeledExample> examples;
  for (const Document& doc : train_docs) {
    if (doc.label == Label::unlabeled) continue;
    examples.emplace_back(featurize_doc(doc), to_string(doc.label));
  }

  NBModel nb;
  DTModel dt;
  const bool use_nb = args.classifier == "nb";
  if (use_nb)
    nb = nb_train(examples, args.smoothing);
  else
    dt = dt_train(examples, args.dt_params);

  if (!args.dump.empty() || args.predict.empty())
    emit(args.dump, use_nb ? nb.dump() : dt.dump());

  if (!args.predict.empty()) {
    std::string csv = "id,predicted\n";
    for (const Document& doc : documents_from_jsonl(args.predict)) {
      const FeatureSet features = featurize_doc(doc);
      const std::string label =
          use_nb ? nb_predict(nb, features).label : dt_predict(dt, features);
      csv += doc.id + "," + label + "\n";
    }
    emit(args.out, csv);
  }
}

struct EvaluateArgs {
  std::vector<std::string> corpora;
  std::string lists_dir;
  std::uint64_t seed = 0;
  double train_fraction = 0.75;
  std::string out;
  std::string table;
  bool serial_timing = false;
  bool stratify = false;
  bool include_neutral = false;
  double smoothing = 0.5;
  TrainParams dt_params;
};

void run_evaluate(const EvaluateArgs& args) {
  std::vector<NamedCorpus> corpora;
  for (const std::string& path : args.corpora)
    corpora.push_back({std::filesystem::path(path).stem().string(),
                       documents_from_jsonl(path)});

  const std::filesystem::path dir = args.lists_dir;
  const StopwordList msa =
      StopwordList::load(dir / "msa_general.txt", ListKind::msa_general);
  const StopwordList corpus_based =
      StopwordList::load(dir / "corpus_based.txt", ListKind::corpus_based);
  const StopwordList egyptian =
      StopwordList::load(dir / "egyptian_general.txt", ListKind::egyptian_general);
  std::map<StopwordMode, StopwordList> lists;
  lists.emplace(StopwordMode::msa_lists, msa);
  lists.emplace(StopwordMode::corpus_based, corpus_based);
  lists.emplace(StopwordMode::egyptian_general, egyptian);
  lists.emplace(StopwordMode::all_lists, combine_lists(combine_lists(msa, corpus_based), egyptian));

  MatrixOptions options;
  options.split.seed = args.seed;
  options.split.train_fraction = args.train_fraction;
  options.split.exclude_neutral = !args.include_neutral;
  options.split.stratify = args.stratify;
  options.serial = args.serial_timing;
  options.nb_smoothing = args.smoothing;
  options.dt_params = args.dt_params;

  const std::vector<EvalResult> results = run_matrix(corpora, lists, options);
  for (const EvalResult& r : results)
    if (!r.error.empty())
      std::cerr << r.corpus_name << "/" << to_string(r.classifier) << "/"
                << to_string(r.feature_mode) << "/" << to_string(r.stopword_mode)
                << ": " << r.error << "\n";

  emit(args.out, results_to_csv(results));
  if (!args.table.empty()) write_file_atomic(args.table, results_to_markdown(results));
}

struct StatsArgs {
  std::vector<std::string> in;
  std::string out;
};

void run_stats(const StatsArgs& args) {
  std::vector<Document> docs;
  for (const std::string& path : args.in) {
    std::vector<Document> part = documents_from_jsonl(path);
    docs.insert(docs.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  emit(args.out, corpus_stats(docs).to_csv());
}

void add_dt_param_options(CLI::App* cmd, TrainParams& params) {
  cmd->add_option("--entropy-cutoff", params.entropy_cutoff,
                  "halt refinement at or below this node entropy")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--depth-cutoff", params.depth_cutoff, "maximum tree depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--support-cutoff", params.support_cutoff,
                  "halt refinement at or below this example count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::string check_fraction(const std::string& value) {
  try {
    const double v = std::stod(value);
    if (v > 0.0 && v < 1.0) return {};
  } catch (const std::exception&) {
  }
  return "must be strictly between 0 and 1";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic social-media sentiment corpus toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI/TOML file");

  PrepareArgs prepare_args;
  auto* prepare = app.add_subcommand("prepare", "clean, filter and annotate a raw corpus");
  prepare->add_option("--in", prepare_args.in, "raw corpus (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  prepare
      ->add_option("--source", prepare_args.source,
                   "source for records that do not name one")
      ->required()
      ->check(CLI::IsMember({"review", "facebook", "twitter"}));
  prepare->add_option("--out", prepare_args.out, "prepared documents (JSON lines)")
      ->required();
  prepare->add_option("--report", prepare_args.report, "filter report CSV");
  prepare->add_option("--topic-words", prepare_args.topic_words, "topic keyword list")
      ->check(CLI::ExistingFile);
  prepare->add_option("--spam-phrases", prepare_args.spam_phrases, "advertising phrase list")
      ->check(CLI::ExistingFile);
  prepare->add_option("--abbrev", prepare_args.abbrev, "abbreviation/emoticon map (TSV)")
      ->check(CLI::ExistingFile);
  prepare
      ->add_option("--translit-rules", prepare_args.translit_rules,
                   "Franco-Arab rule table (TSV)")
      ->check(CLI::ExistingFile);
  prepare
      ->add_option("--translit-overrides", prepare_args.translit_overrides,
                   "fixed Franco-Arab spellings (TSV)")
      ->check(CLI::ExistingFile);
  prepare
      ->add_option("--translit-lexicon", prepare_args.translit_lexicon,
                   "word frequency list for candidate ranking")
      ->check(CLI::ExistingFile);
  prepare->add_option("--gloss", prepare_args.gloss, "English-to-Arabic dictionary (TSV)")
      ->check(CLI::ExistingFile);
  prepare->add_option("--emoticons", prepare_args.emoticons, "emoticon lexicon")
      ->check(CLI::ExistingFile);
  prepare->callback([&] { run_prepare(prepare_args); });

  StopgenArgs stopgen_args;
  auto* stopgen = app.add_subcommand("stopgen", "generate a stopword list");
  stopgen
      ->add_option("--corpora", stopgen_args.corpora, "prepared documents (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  stopgen->add_option("--mode", stopgen_args.mode, "list flavor")
      ->check(CLI::IsMember({"corpus-based", "egyptian", "combined"}))
      ->capture_default_str();
  stopgen->add_option("--k", stopgen_args.k, "how many top-frequency words to take")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  stopgen
      ->add_option("--candidates", stopgen_args.candidates,
                   "annotated candidate words (TSV)")
      ->check(CLI::ExistingFile);
  stopgen->add_option("--msa-lists", stopgen_args.msa_lists, "published MSA stopword lists")
      ->check(CLI::ExistingFile);
  stopgen
      ->add_option("--english-stoplist", stopgen_args.english_stoplist,
                   "English stopword list")
      ->check(CLI::ExistingFile);
  stopgen->add_option("--rules", stopgen_args.rules, "morphology rules (TSV)")
      ->required()
      ->check(CLI::ExistingFile);
  stopgen->add_option("--out", stopgen_args.out, "output list file")->required();
  stopgen->callback([&] { run_stopgen(stopgen_args); });

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "train a classifier; dump or predict");
  classify->add_option("--train", classify_args.train, "labeled documents (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  classify->add_option("--classifier", classify_args.classifier, "nb or dt")
      ->check(CLI::IsMember({"nb", "dt"}))
      ->capture_default_str();
  classify->add_option("--features", classify_args.features, "unigram or bigram")
      ->check(CLI::IsMember({"unigram", "bigram"}))
      ->capture_default_str();
  classify->add_option("--stopwords", classify_args.stopwords, "stopword list to remove")
      ->check(CLI::ExistingFile);
  classify->add_option("--dump", classify_args.dump, "write the model dump here");
  classify->add_option("--predict", classify_args.predict, "documents to label");
  classify->add_option("--out", classify_args.out, "predictions CSV");
  classify
      ->add_option("--smoothing", classify_args.smoothing, "Bernoulli smoothing constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_dt_param_options(classify, classify_args.dt_params);
  classify->callback([&] { run_classify(classify_args); });

  EvaluateArgs evaluate_args;
  auto* evaluate = app.add_subcommand(
      "evaluate", "run the classifier x features x stopword-list matrix");
  evaluate
      ->add_option("--corpora", evaluate_args.corpora, "prepared documents (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate
      ->add_option("--lists", evaluate_args.lists_dir,
                   "directory holding msa_general.txt, corpus_based.txt, "
                   "egyptian_general.txt")
      ->required()
      ->check(CLI::ExistingDirectory);
  evaluate->add_option("--seed", evaluate_args.seed, "split shuffle seed")
      ->capture_default_str();
  evaluate
      ->add_option("--train-fraction", evaluate_args.train_fraction,
                   "share of documents used for training")
      ->check(CLI::Validator(check_fraction, "FRACTION"))
      ->capture_default_str();
  evaluate->add_option("--out", evaluate_args.out, "results CSV")->required();
  evaluate->add_option("--table", evaluate_args.table, "human-readable results table");
  evaluate->add_flag("--serial-timing", evaluate_args.serial_timing,
                     "run cells one at a time so timings are comparable");
  evaluate->add_flag("--stratify", evaluate_args.stratify,
                     "split each label group separately");
  evaluate->add_flag("--include-neutral", evaluate_args.include_neutral,
                     "keep neutral documents instead of the two-class default");
  evaluate
      ->add_option("--smoothing", evaluate_args.smoothing, "Bernoulli smoothing constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_dt_param_options(evaluate, evaluate_args.dt_params);
  evaluate->callback([&] { run_evaluate(evaluate_args); });

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "per-source label counts and percentages");
  stats->add_option("--in", stats_args.in, "prepared documents (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  stats->add_option("--out", stats_args.out, "stats CSV (stdout when omitted)");
  stats->callback([&] { run_stats(stats_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
