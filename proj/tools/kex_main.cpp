// Command-line front end for the keyphrase extraction pipeline:
//   kex index-background  build the background n-gram index
//   kex featurize         filter responses, sample negatives, emit features
//   kex train             fit a weighted logistic regression
//   kex eval              train/evaluate the standard model suite
//   kex analyze           exploratory response statistics

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kex/analysis.hpp"
#include "kex/candidates.hpp"
#include "kex/config.hpp"
#include "kex/corpus.hpp"
#include "kex/experiments.hpp"
#include "kex/featurize.hpp"
#include "kex/grammar.hpp"
#include "kex/logistic.hpp"
#include "kex/ngram_index.hpp"
#include "kex/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonArgs {
  std::string config_path;
  std::optional<std::string> foreground, background, annotations, responses, blocklist,
      index, output;
  std::optional<size_t> negative_ratio, max_phrase_words, n_max, commonness_bins;
  std::optional<double> negative_weight, holdout_fraction;
  std::optional<uint64_t> seed;
  std::optional<std::string> split_mode;
  bool no_frequency = false, no_commonness = false, no_grammar = false,
       no_positional = false;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON config file; flags override it");
  cmd->add_option("--foreground", args.foreground, "foreground corpus directory");
  cmd->add_option("--background", args.background, "background corpus directory");
  cmd->add_option("--annotations", args.annotations, "annotation (.ann) directory");
  cmd->add_option("--responses", args.responses, "responses CSV");
  cmd->add_option("--blocklist", args.blocklist, "spurious-phrase blocklist file");
  cmd->add_option("--index", args.index, "background index file");
  cmd->add_option("--out-dir", args.output, "output directory");
  cmd->add_option("--negative-ratio", args.negative_ratio, "negatives per positive");
  cmd->add_option("--negative-weight", args.negative_weight, "sample weight of negatives");
  cmd->add_option("--max-phrase-words", args.max_phrase_words, "keyphrase length cap");
  cmd->add_option("--n-max", args.n_max, "maximum n-gram order");
  cmd->add_option("--commonness-bins", args.commonness_bins,
                  "one-hot commonness bins (0 = raw value)");
  cmd->add_option("--seed", args.seed, "seed for all randomness");
  cmd->add_option("--split", args.split_mode, "in-sample or holdout");
  cmd->add_option("--holdout-fraction", args.holdout_fraction, "holdout eval fraction");
  cmd->add_flag("--no-frequency", args.no_frequency, "disable frequency features");
  cmd->add_flag("--no-commonness", args.no_commonness, "disable commonness feature");
  cmd->add_flag("--no-grammar", args.no_grammar, "disable grammatical features");
  cmd->add_flag("--no-positional", args.no_positional, "disable positional features");
}

kex::RunConfig resolve_config(const CommonArgs& args) {
  kex::RunConfig cfg;
  if (!args.config_path.empty()) cfg = kex::load_run_config(args.config_path);
  if (args.foreground) cfg.foreground_dir = *args.foreground;
  if (args.background) cfg.background_dir = *args.background;
  if (args.annotations) cfg.annotations_dir = *args.annotations;
  if (args.responses) cfg.responses_file = *args.responses;
  if (args.blocklist) cfg.blocklist_file = *args.blocklist;
  if (args.index) cfg.index_file = *args.index;
  if (args.output) cfg.output_dir = *args.output;
  if (args.negative_ratio) cfg.negative_ratio = *args.negative_ratio;
  if (args.negative_weight) cfg.negative_weight = *args.negative_weight;
  if (args.max_phrase_words) cfg.max_phrase_words = *args.max_phrase_words;
  if (args.n_max) cfg.n_max = *args.n_max;
  if (args.commonness_bins) cfg.commonness_bins = *args.commonness_bins;
  if (args.seed) cfg.seed = *args.seed;
  if (args.split_mode) cfg.split_mode = *args.split_mode;
  if (args.holdout_fraction) cfg.holdout_fraction = *args.holdout_fraction;
  if (args.no_frequency) cfg.families.frequency = false;
  if (args.no_commonness) cfg.families.commonness = false;
  if (args.no_grammar) cfg.families.grammar = false;
  if (args.no_positional) cfg.families.positional = false;
  cfg.validate();
  return cfg;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

int cmd_index(const kex::RunConfig& cfg) {
  require(!cfg.background_dir.empty(), "--background directory is required");
  require(!cfg.index_file.empty(), "--index output path is required");
  kex::Corpus background = kex::load_corpus(cfg.background_dir);
  kex::NgramIndex index = kex::NgramIndex::build(background, cfg.n_max);
  if (fs::path(cfg.index_file).has_parent_path()) {
    fs::create_directories(fs::path(cfg.index_file).parent_path());
  }
  index.save(cfg.index_file);
  std::cout << "indexed " << background.size() << " documents, "
            << background.total_tokens() << " tokens -> " << cfg.index_file << "\n";
  return 0;
}

int cmd_featurize(const kex::RunConfig& cfg) {
  require(!cfg.foreground_dir.empty(), "--foreground directory is required");
  require(!cfg.responses_file.empty(), "--responses file is required");
  require(!cfg.blocklist_file.empty(), "--blocklist file is required");
  require(!cfg.index_file.empty(), "--index file is required");
  require(!cfg.output_dir.empty(), "--out-dir is required");

  kex::Corpus foreground = kex::load_corpus(cfg.foreground_dir);
  if (!cfg.annotations_dir.empty()) {
    kex::attach_annotations(foreground, cfg.annotations_dir);
  }
  kex::NgramIndex index = kex::NgramIndex::load(cfg.index_file);
  std::vector<kex::Response> responses = kex::load_responses_csv(cfg.responses_file);
  std::vector<std::string> blocklist = kex::load_blocklist(cfg.blocklist_file);

  kex::FeaturizeResult result =
      kex::run_featurize(foreground, index, responses, blocklist, cfg.featurize_options());

  fs::create_directories(cfg.output_dir);
  const fs::path out(cfg.output_dir);
  kex::save_matrix_csv(result.matrix, (out / "features.csv").string());
  kex::save_examples_jsonl(result.matrix, (out / "examples.jsonl").string());
  kex::write_text_file((out / "corpus_manifest.json").string(),
                       kex::corpus_manifest_json(foreground));

  kex::Provenance prov;
  prov.config_hash = cfg.hash();
  prov.seed = cfg.seed;
  prov.details = {
      {"funnel",
       {{"initial", result.funnel.initial},
        {"after_spurious", result.funnel.after_spurious},
        {"after_length", result.funnel.after_length},
        {"after_extractive", result.funnel.after_extractive},
        {"unique_positives", result.funnel.unique_positives},
        {"negatives", result.funnel.negatives}}},
      {"docs_without_annotations", result.docs_without_annotations},
  };
  prov.artifacts["features.csv"] = kex::file_checksum((out / "features.csv").string());
  prov.artifacts["examples.jsonl"] = kex::file_checksum((out / "examples.jsonl").string());
  kex::write_provenance(cfg.output_dir, prov);

  std::cout << "funnel: " << result.funnel.initial << " -> " << result.funnel.after_spurious
            << " -> " << result.funnel.after_length << " -> "
            << result.funnel.after_extractive << " responses; "
            << result.funnel.unique_positives << " positives + "
            << result.funnel.negatives << " negatives -> " << (out / "features.csv").string()
            << "\n";
  return 0;
}

std::vector<std::string> resolve_feature_selection(const std::string& selection,
                                                   const kex::FeatureMatrix& matrix,
                                                   size_t bins) {
  if (selection.empty()) return matrix.feature_names;
  std::vector<std::string> names;
  std::string token;
  std::istringstream in(selection);
  while (std::getline(in, token, ',')) {
    token = kex::trim(token);
    if (token.empty()) continue;
    if (token == "frequency") {
      names.insert(names.end(), {"log_tf", "tf_idf", "g2", "bm25", "log_odds"});
    } else if (token == "commonness") {
      if (bins > 0) {
        for (size_t b = 0; b < bins; ++b) {
          names.push_back("commonness_bin_" + std::to_string(b));
        }
      } else {
        names.push_back("commonness");
      }
    } else if (token == "grammar") {
      for (const std::string& n : kex::grammar_feature_names()) names.push_back(n);
    } else if (token == "positional") {
      names.insert(names.end(),
                   {"abs_first_occurrence", "rel_first_occurrence", "in_first_sentence"});
    } else {
      names.push_back(token);
    }
  }
  return names;
}

int cmd_train(const kex::RunConfig& cfg, const std::string& matrix_path,
              const std::string& feature_selection, const std::string& model_path) {
  require(!matrix_path.empty(), "--matrix is required");
  require(!model_path.empty(), "--model output path is required");
  kex::verify_artifact(matrix_path);
  kex::FeatureMatrix matrix = kex::load_matrix_csv(matrix_path);
  if (cfg.commonness_bins > 0) {
    matrix = kex::with_binned_commonness(matrix, cfg.commonness_bins);
  }
  const std::vector<std::string> names =
      resolve_feature_selection(feature_selection, matrix, cfg.commonness_bins);
  const std::vector<size_t> cols = matrix.column_indices(names);

  std::vector<std::vector<double>> features;
  std::vector<int> labels;
  std::vector<double> weights;
  features.reserve(matrix.rows.size());
  for (const kex::MatrixRow& row : matrix.rows) {
    std::vector<double> values;
    values.reserve(cols.size());
    for (size_t c : cols) values.push_back(row.values[c]);
    features.push_back(std::move(values));
    labels.push_back(row.label);
    weights.push_back(row.weight);
  }
  kex::Model model = kex::train_logistic(features, labels, weights, names);
  if (model.separation_warning) {
    std::cerr << "warning: coefficients hit the separation cap; data may be perfectly "
                 "separable\n";
  }
  if (fs::path(model_path).has_parent_path()) {
    fs::create_directories(fs::path(model_path).parent_path());
  }
  kex::save_model_json(model, model_path, cfg.hash());
  std::cout << "trained " << names.size() << " features on " << matrix.rows.size()
            << " examples -> " << model_path << "\n";
  return 0;
}

int cmd_eval(const kex::RunConfig& cfg, const std::string& matrix_path) {
  require(!matrix_path.empty(), "--matrix is required");
  require(!cfg.output_dir.empty(), "--out-dir is required");
  kex::verify_artifact(matrix_path);
  kex::FeatureMatrix matrix = kex::load_matrix_csv(matrix_path);

  kex::SplitOptions split;
  split.mode = cfg.split_mode;
  split.holdout_fraction = cfg.holdout_fraction;
  split.seed = cfg.seed;
  std::vector<kex::EvalOutcome> outcomes =
      kex::run_eval_suite(matrix, cfg.output_dir, split);

  kex::Provenance prov;
  prov.config_hash = cfg.hash();
  prov.seed = cfg.seed;
  json models = json::array();
  for (const kex::EvalOutcome& o : outcomes) {
    models.push_back({{"model", o.name}, {"auc", o.curve.auc}});
    prov.artifacts["curve_" + o.name + ".csv"] =
        kex::file_checksum((fs::path(cfg.output_dir) / ("curve_" + o.name + ".csv")).string());
  }
  prov.details = {{"models", models}};
  prov.artifacts["auc_table.csv"] =
      kex::file_checksum((fs::path(cfg.output_dir) / "auc_table.csv").string());
  kex::write_provenance(cfg.output_dir, prov);

  std::cout << "evaluated " << outcomes.size() << " models -> " << cfg.output_dir
            << "/auc_table.csv\n";
  return 0;
}

int cmd_analyze(const kex::RunConfig& cfg, size_t hist_bins) {
  require(!cfg.foreground_dir.empty(), "--foreground directory is required");
  require(!cfg.responses_file.empty(), "--responses file is required");
  require(!cfg.blocklist_file.empty(), "--blocklist file is required");
  require(!cfg.index_file.empty(), "--index file is required");
  require(!cfg.output_dir.empty(), "--out-dir is required");

  kex::Corpus foreground = kex::load_corpus(cfg.foreground_dir);
  if (!cfg.annotations_dir.empty()) {
    kex::attach_annotations(foreground, cfg.annotations_dir);
  }
  kex::NgramIndex index = kex::NgramIndex::load(cfg.index_file);
  std::vector<kex::Response> raw = kex::load_responses_csv(cfg.responses_file);
  std::vector<std::string> blocklist = kex::load_blocklist(cfg.blocklist_file);

  std::vector<kex::Response> no_spurious =
      kex::filter_spurious(raw, blocklist, foreground);
  std::vector<kex::Response> eligible =
      kex::filter_length(no_spurious, cfg.max_phrase_words);

  fs::create_directories(cfg.output_dir);
  const fs::path out(cfg.output_dir);

  kex::save_histogram_csv(kex::phrase_length_histogram(no_spurious),
                          (out / "phrase_length.csv").string());
  kex::save_histogram_csv(kex::keyphrase_count_histogram(raw),
                          (out / "keyphrase_count.csv").string());
  for (uint64_t cutoff : {0, 5, 10, 15, 20}) {
    kex::save_histogram_csv(
        kex::commonness_histogram(eligible, index, cutoff, hist_bins),
        (out / ("commonness_cutoff_" + std::to_string(cutoff) + ".csv")).string());
  }

  const double extractive = kex::extractive_fraction_pct(eligible, foreground);
  const kex::FirstSentenceStats first = kex::first_sentence_stats(eligible, foreground);
  const kex::GrammarCategoryStats cats =
      kex::grammatical_category_fractions(eligible, foreground);

  json summary = {
      {"responses",
       {{"initial", raw.size()},
        {"after_spurious", no_spurious.size()},
        {"after_length", eligible.size()}}},
      {"extractive_fraction_pct", extractive},
      {"extractive_population", "responses after spurious and length filters"},
      {"first_sentence",
       {{"pct_keyphrases", first.pct_keyphrases_in_first_sentence},
        {"pct_unique_terms", first.pct_unique_terms_in_first_sentence},
        {"unique_extractive_phrases", first.unique_extractive_phrases},
        {"population", "unique extractive (doc, phrase) pairs"}}},
      {"grammatical_categories",
       {{"pct_partial_np", cats.pct_partial_np},
        {"pct_partial_vp", cats.pct_partial_vp},
        {"pct_partial_technical_term", cats.pct_partial_technical_term},
        {"unique_extractive_phrases", cats.unique_extractive_phrases},
        {"docs_skipped", cats.docs_skipped},
        {"population", "unique extractive (doc, phrase) pairs in annotated documents"}}},
  };
  kex::write_text_file((out / "summary.json").string(), summary.dump(2) + "\n");

  kex::Provenance prov;
  prov.config_hash = cfg.hash();
  prov.seed = cfg.seed;
  prov.artifacts["summary.json"] = kex::file_checksum((out / "summary.json").string());
  kex::write_provenance(cfg.output_dir, prov);

  std::cout << "analysis written to " << cfg.output_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"descriptive keyphrase extraction pipeline"};
  app.require_subcommand(1);

  CommonArgs index_args, feat_args, train_args, eval_args, analyze_args;
  std::string train_matrix, train_features, train_model, eval_matrix;

  CLI::App* sub_index =
      app.add_subcommand("index-background", "build the background n-gram index");
  add_common_options(sub_index, index_args);

  CLI::App* sub_feat =
      app.add_subcommand("featurize", "filter responses and build the feature matrix");
  add_common_options(sub_feat, feat_args);

  CLI::App* sub_train = app.add_subcommand("train", "fit one logistic regression model");
  add_common_options(sub_train, train_args);
  sub_train->add_option("--matrix", train_matrix, "feature matrix CSV");
  sub_train->add_option("--features", train_features,
                        "comma list of columns and/or families "
                        "(frequency,commonness,grammar,positional); default all");
  sub_train->add_option("--model", train_model, "model JSON output path");

  CLI::App* sub_eval =
      app.add_subcommand("eval", "train and evaluate the standard model suite");
  add_common_options(sub_eval, eval_args);
  sub_eval->add_option("--matrix", eval_matrix, "feature matrix CSV");

  CLI::App* sub_analyze =
      app.add_subcommand("analyze", "exploratory statistics of the responses");
  add_common_options(sub_analyze, analyze_args);
  size_t analyze_hist_bins = 20;
  sub_analyze->add_option("--hist-bins", analyze_hist_bins,
                          "bins for the commonness histograms");

  CLI11_PARSE(app, argc, argv);

  const std::string stage = app.get_subcommands().front()->get_name();
  try {
    if (sub_index->parsed()) return cmd_index(resolve_config(index_args));
    if (sub_feat->parsed()) return cmd_featurize(resolve_config(feat_args));
    if (sub_train->parsed()) {
      return cmd_train(resolve_config(train_args), train_matrix, train_features,
                       train_model);
    }
    if (sub_eval->parsed()) return cmd_eval(resolve_config(eval_args), eval_matrix);
    if (sub_analyze->parsed()) {
      return cmd_analyze(resolve_config(analyze_args), analyze_hist_bins);
    }
  } catch (const std::exception& e) {
    std::cerr << "error (" << stage << "): " << e.what() << "\n";
    return 1;
  }
  return 1;
}
