#pragma once

#include <string>
#include <vector>

#include "kex/corpus.hpp"

namespace kex {

struct TrainConfig {
  double tolerance = 1e-8;  // gradient infinity-norm at the optimum
  int max_iterations = 200;
  // Separation guard on standardized coefficients. Must sit below the
  // magnitude where residuals vanish under `tolerance` (about 16 for a
  // single example of weight 0.1), or separated fits would "converge"
  // before tripping it.
  double coefficient_cap = 15.0;
};

struct Model {
  std::vector<std::string> feature_names;
  std::vector<double> coefficients;  // one per feature name, original scale
  double intercept = 0.0;
  bool separation_warning = false;
  TrainConfig config;
};

double sigmoid(double z);

// Sum over examples of w * (y*ln(p) + (1-y)*ln(1-p)) with p = sigmoid(b0 + x.beta).
double weighted_log_likelihood(const std::vector<std::vector<double>>& features,
                               const std::vector<int>& labels,
                               const std::vector<double>& weights,
                               const std::vector<double>& coefficients, double intercept);

// Gradient of the weighted log-likelihood; entries follow the coefficient
// order with the intercept appended last.
std::vector<double> log_likelihood_gradient(const std::vector<std::vector<double>>& features,
                                            const std::vector<int>& labels,
                                            const std::vector<double>& weights,
                                            const std::vector<double>& coefficients,
                                            double intercept);

// Unregularized maximum likelihood by damped Newton iterations. Features are
// standardized internally; the returned coefficients are on the original
// scale. Perfect separation is caught by the coefficient cap and reported
// through Model::separation_warning instead of diverging.
Model train_logistic(const std::vector<std::vector<double>>& features,
                     const std::vector<int>& labels, const std::vector<double>& weights,
                     const std::vector<std::string>& feature_names,
                     const TrainConfig& config = {});

double predict(const Model& model, const std::vector<double>& feature_values);

// Validates that the caller's feature names match the model's, in order.
double predict_named(const Model& model, const std::vector<std::string>& names,
                     const std::vector<double>& feature_values);

struct RankedPhrase {
  std::string phrase;
  double score = 0.0;
};

// Descending score; ties broken by lexicographic phrase order.
std::vector<RankedPhrase> rank(const Model& model,
                               const std::vector<std::pair<std::string, std::vector<double>>>&
                                   candidates);

void save_model_json(const Model& model, const std::string& path,
                     const std::string& config_hash = "");
Model load_model_json(const std::string& path);

}  // namespace kex
