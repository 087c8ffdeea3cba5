#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kex/featurize.hpp"
#include "kex/logistic.hpp"
#include "kex/pr_curve.hpp"

namespace kex {

// One model configuration: a named feature subset, optionally with the raw
// commonness column replaced by one-hot bins.
struct ModelSpec {
  std::string name;
  std::vector<std::string> features;
  size_t commonness_bins = 0;
};

// The five standard configurations: frequency features alone, then adding
// commonness, grammar and positional features, plus the corpus-independent
// model (log(tf) + positional + POS-based grammar features only).
std::vector<ModelSpec> standard_model_specs();

// log(tf) + commonness binned into 2..20 one-hot bins, one spec per width.
std::vector<ModelSpec> commonness_bin_sweep_specs();

struct SplitOptions {
  std::string mode = "in-sample";  // or "holdout"
  double holdout_fraction = 0.2;
  uint64_t seed = 1;
};

struct EvalOutcome {
  std::string name;
  Model model;
  PRCurve curve;
};

// Trains and evaluates each spec on shared data and split. Outcomes are in
// spec order.
std::vector<EvalOutcome> compare_models(const FeatureMatrix& matrix,
                                        const std::vector<ModelSpec>& specs,
                                        const SplitOptions& split,
                                        const TrainConfig& train_config = {});

// Runs the standard specs plus the bin sweep, writing curve_<name>.csv per
// model and an auc_table.csv ranked by AUC. Returns the outcomes.
std::vector<EvalOutcome> run_eval_suite(const FeatureMatrix& matrix,
                                        const std::string& output_dir,
                                        const SplitOptions& split,
                                        const TrainConfig& train_config = {});

void save_auc_table_csv(const std::vector<EvalOutcome>& outcomes, const std::string& path);

}  // namespace kex
