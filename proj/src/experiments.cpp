#include "kex/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <stdexcept>

#include "kex/csv.hpp"
#include "kex/grammar.hpp"
#include "kex/util.hpp"

namespace fs = std::filesystem;

namespace kex {

namespace {

const std::vector<std::string> kFrequencyFeatures = {"log_tf", "tf_idf", "g2", "bm25",
                                                     "log_odds"};
const std::vector<std::string> kGrammarPosFeatures = {
    "is_technical_term", "is_compound_technical_term", "is_partial_technical_term",
    "is_partial_compound_technical_term"};
const std::vector<std::string> kPositionalFeatures = {
    "abs_first_occurrence", "rel_first_occurrence", "in_first_sentence"};

std::vector<std::string> concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<ModelSpec> standard_model_specs() {
  std::vector<ModelSpec> specs;
  specs.push_back({"frequency", kFrequencyFeatures});
  specs.push_back({"frequency_commonness", concat(kFrequencyFeatures, {"commonness"})});

  std::vector<std::string> with_grammar = concat(kFrequencyFeatures, {"commonness"});
  for (const std::string& name : grammar_feature_names()) with_grammar.push_back(name);
  specs.push_back({"frequency_commonness_grammar", with_grammar});

  specs.push_back({"all_features", concat(with_grammar, kPositionalFeatures)});

  specs.push_back({"corpus_independent",
                   concat(concat({"log_tf"}, kGrammarPosFeatures), kPositionalFeatures)});
  return specs;
}

std::vector<ModelSpec> commonness_bin_sweep_specs() {
  std::vector<ModelSpec> specs;
  for (size_t bins = 2; bins <= 20; ++bins) {
    char name[32];
    std::snprintf(name, sizeof(name), "logtf_commonness_bins_%02zu", bins);
    specs.push_back({name, {"log_tf", "commonness"}, bins});
  }
  return specs;
}

namespace {

struct SplitData {
  std::vector<size_t> train_rows;
  std::vector<size_t> eval_rows;
};

SplitData split_rows(size_t n, const SplitOptions& split) {
  SplitData data;
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (split.mode == "in-sample") {
    data.train_rows = order;
    data.eval_rows = order;
    return data;
  }
  if (split.mode != "holdout") {
    throw std::runtime_error("unknown split mode: " + split.mode);
  }
  Rng rng(split.seed);
  rng.shuffle(order);
  size_t eval_count = static_cast<size_t>(static_cast<double>(n) * split.holdout_fraction);
  eval_count = std::clamp<size_t>(eval_count, 1, n - 1);
  data.eval_rows.assign(order.begin(), order.begin() + eval_count);
  data.train_rows.assign(order.begin() + eval_count, order.end());
  std::sort(data.train_rows.begin(), data.train_rows.end());
  std::sort(data.eval_rows.begin(), data.eval_rows.end());
  return data;
}

std::vector<std::string> resolve_features(const ModelSpec& spec) {
  if (spec.commonness_bins == 0) return spec.features;
  std::vector<std::string> names;
  for (const std::string& f : spec.features) {
    if (f == "commonness") {
      for (size_t b = 0; b < spec.commonness_bins; ++b) {
        names.push_back("commonness_bin_" + std::to_string(b));
      }
    } else {
      names.push_back(f);
    }
  }
  return names;
}

}  // namespace

std::vector<EvalOutcome> compare_models(const FeatureMatrix& matrix,
                                        const std::vector<ModelSpec>& specs,
                                        const SplitOptions& split,
                                        const TrainConfig& train_config) {
  const SplitData data = split_rows(matrix.rows.size(), split);
  std::vector<EvalOutcome> outcomes;
  outcomes.reserve(specs.size());
  for (const ModelSpec& spec : specs) {
    const FeatureMatrix* source = &matrix;
    FeatureMatrix binned;
    if (spec.commonness_bins > 0) {
      binned = with_binned_commonness(matrix, spec.commonness_bins);
      source = &binned;
    }
    const std::vector<std::string> names = resolve_features(spec);
    const std::vector<size_t> cols = source->column_indices(names);

    std::vector<std::vector<double>> features;
    std::vector<int> labels;
    std::vector<double> weights;
    features.reserve(data.train_rows.size());
    for (size_t i : data.train_rows) {
      const MatrixRow& row = source->rows[i];
      std::vector<double> values;
      values.reserve(cols.size());
      for (size_t c : cols) values.push_back(row.values[c]);
      features.push_back(std::move(values));
      labels.push_back(row.label);
      weights.push_back(row.weight);
    }

    EvalOutcome outcome;
    outcome.name = spec.name;
    outcome.model = train_logistic(features, labels, weights, names, train_config);

    std::vector<double> scores;
    std::vector<int> eval_labels;
    scores.reserve(data.eval_rows.size());
    for (size_t i : data.eval_rows) {
      const MatrixRow& row = source->rows[i];
      std::vector<double> values;
      values.reserve(cols.size());
      for (size_t c : cols) values.push_back(row.values[c]);
      scores.push_back(predict(outcome.model, values));
      eval_labels.push_back(row.label);
    }
    outcome.curve = pr_curve(scores, eval_labels);
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

void save_auc_table_csv(const std::vector<EvalOutcome>& outcomes, const std::string& path) {
  std::vector<const EvalOutcome*> ranked;
  ranked.reserve(outcomes.size());
  for (const EvalOutcome& o : outcomes) ranked.push_back(&o);
  std::sort(ranked.begin(), ranked.end(), [](const EvalOutcome* a, const EvalOutcome* b) {
    if (a->curve.auc != b->curve.auc) return a->curve.auc > b->curve.auc;
    return a->name < b->name;
  });
  std::string out = "model,auc\n";
  for (const EvalOutcome* o : ranked) {
    out += csv_row({o->name, format_double(o->curve.auc)});
  }
  write_text_file(path, out);
}

std::vector<EvalOutcome> run_eval_suite(const FeatureMatrix& matrix,
                                        const std::string& output_dir,
                                        const SplitOptions& split,
                                        const TrainConfig& train_config) {
  fs::create_directories(output_dir);
  std::vector<ModelSpec> specs = standard_model_specs();
  for (ModelSpec& spec : commonness_bin_sweep_specs()) specs.push_back(std::move(spec));

  std::vector<EvalOutcome> outcomes = compare_models(matrix, specs, split, train_config);
  for (const EvalOutcome& outcome : outcomes) {
    save_curve_csv(outcome.curve,
                   (fs::path(output_dir) / ("curve_" + outcome.name + ".csv")).string());
  }
  save_auc_table_csv(outcomes, (fs::path(output_dir) / "auc_table.csv").string());
  return outcomes;
}

}  // namespace kex
