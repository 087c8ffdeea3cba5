#include "kex/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "kex/util.hpp"

using nlohmann::json;

namespace kex {

double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

// ln(1 + e^z) without overflow.
double softplus(double z) {
  return std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z)));
}

double dot_row(const std::vector<double>& row, const std::vector<double>& coef,
               double intercept) {
  double z = intercept;
  for (size_t j = 0; j < row.size(); ++j) z += row[j] * coef[j];
  return z;
}

// Cholesky solve of A x = b for symmetric positive definite A (dense,
// row-major). Retries once with a tiny diagonal jitter if the
// factorization hits a non-positive pivot.
std::vector<double> solve_spd(std::vector<double> a, std::vector<double> b, size_t n) {
  const std::vector<double> a0 = a;
  const std::vector<double> b0 = b;
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (attempt == 1) {
      a = a0;
      b = b0;
      for (size_t i = 0; i < n; ++i) a[i * n + i] += 1e-10;
    }
    bool ok = true;
    // L L^T = A, L stored in the lower triangle of a
    for (size_t i = 0; i < n && ok; ++i) {
      for (size_t j = 0; j <= i; ++j) {
        double sum = a[i * n + j];
        for (size_t k = 0; k < j; ++k) sum -= a[i * n + k] * a[j * n + k];
        if (i == j) {
          if (sum <= 0.0) {
            ok = false;
            break;
          }
          a[i * n + i] = std::sqrt(sum);
        } else {
          a[i * n + j] = sum / a[j * n + j];
        }
      }
    }
    if (!ok) continue;
    // forward then backward substitution
    for (size_t i = 0; i < n; ++i) {
      double sum = b[i];
      for (size_t k = 0; k < i; ++k) sum -= a[i * n + k] * b[k];
      b[i] = sum / a[i * n + i];
    }
    for (size_t ii = n; ii-- > 0;) {
      double sum = b[ii];
      for (size_t k = ii + 1; k < n; ++k) sum -= a[k * n + ii] * b[k];
      b[ii] = sum / a[ii * n + ii];
    }
    return b;
  }
  throw std::runtime_error("logistic regression normal equations are singular");
}

}  // namespace

double weighted_log_likelihood(const std::vector<std::vector<double>>& features,
                               const std::vector<int>& labels,
                               const std::vector<double>& weights,
                               const std::vector<double>& coefficients, double intercept) {
  double ll = 0.0;
  for (size_t i = 0; i < features.size(); ++i) {
    const double z = dot_row(features[i], coefficients, intercept);
    ll += weights[i] * (labels[i] * z - softplus(z));
  }
  return ll;
}

std::vector<double> log_likelihood_gradient(const std::vector<std::vector<double>>& features,
                                            const std::vector<int>& labels,
                                            const std::vector<double>& weights,
                                            const std::vector<double>& coefficients,
                                            double intercept) {
  const size_t p = coefficients.size();
  std::vector<double> grad(p + 1, 0.0);
  for (size_t i = 0; i < features.size(); ++i) {
    const double z = dot_row(features[i], coefficients, intercept);
    const double resid = weights[i] * (labels[i] - sigmoid(z));
    for (size_t j = 0; j < p; ++j) grad[j] += resid * features[i][j];
    grad[p] += resid;
  }
  return grad;
}

Model train_logistic(const std::vector<std::vector<double>>& features,
                     const std::vector<int>& labels, const std::vector<double>& weights,
                     const std::vector<std::string>& feature_names,
                     const TrainConfig& config) {
  const size_t n = features.size();
  const size_t p = feature_names.size();
  if (n == 0 || labels.size() != n || weights.size() != n) {
    throw std::invalid_argument("training data size mismatch");
  }
  bool has_pos = false, has_neg = false;
  for (size_t i = 0; i < n; ++i) {
    if (features[i].size() != p) {
      throw std::invalid_argument("feature row " + std::to_string(i) +
                                  " has wrong width");
    }
    for (size_t j = 0; j < p; ++j) {
      if (!std::isfinite(features[i][j])) {
        throw std::runtime_error("non-finite feature '" + feature_names[j] +
                                 "' in example " + std::to_string(i));
      }
    }
    if (labels[i]) has_pos = true;
    else has_neg = true;
  }
  if (!has_pos || !has_neg) {
    throw std::runtime_error("training needs at least one positive and one negative example");
  }

  // standardize for conditioning; coefficients are mapped back afterwards
  std::vector<double> mean(p, 0.0), sd(p, 1.0);
  for (size_t j = 0; j < p; ++j) {
    double m = 0.0;
    for (size_t i = 0; i < n; ++i) m += features[i][j];
    m /= static_cast<double>(n);
    double var = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const double d = features[i][j] - m;
      var += d * d;
    }
    var /= static_cast<double>(n);
    mean[j] = m;
    sd[j] = var > 1e-24 ? std::sqrt(var) : 1.0;
  }
  std::vector<std::vector<double>> x(n, std::vector<double>(p));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < p; ++j) x[i][j] = (features[i][j] - mean[j]) / sd[j];
  }

  const size_t dim = p + 1;  // + intercept
  std::vector<double> beta(p, 0.0);
  double intercept = 0.0;
  bool separated = false;

  double ll = weighted_log_likelihood(x, labels, weights, beta, intercept);
  for (int iter = 0; iter < config.max_iterations; ++iter) {
    std::vector<double> grad = log_likelihood_gradient(x, labels, weights, beta, intercept);
    double gmax = 0.0;
    for (double g : grad) gmax = std::max(gmax, std::fabs(g));
    if (gmax <= config.tolerance) break;

    // negative Hessian: sum of w * p * (1-p) * x x^T over examples
    std::vector<double> hess(dim * dim, 0.0);
    for (size_t i = 0; i < n; ++i) {
      const double z = dot_row(x[i], beta, intercept);
      const double pr = sigmoid(z);
      const double wpq = weights[i] * pr * (1.0 - pr);
      if (wpq == 0.0) continue;
      for (size_t a = 0; a < dim; ++a) {
        const double xa = a < p ? x[i][a] : 1.0;
        for (size_t b = 0; b <= a; ++b) {
          const double xb = b < p ? x[i][b] : 1.0;
          hess[a * dim + b] += wpq * xa * xb;
        }
      }
    }
    for (size_t a = 0; a < dim; ++a) {
      for (size_t b = a + 1; b < dim; ++b) hess[a * dim + b] = hess[b * dim + a];
    }

    std::vector<double> step = solve_spd(std::move(hess), grad, dim);

    // damped Newton: halve until the likelihood stops decreasing
    double scale = 1.0;
    std::vector<double> beta_next(p);
    double intercept_next = 0.0, ll_next = 0.0;
    for (;;) {
      for (size_t j = 0; j < p; ++j) beta_next[j] = beta[j] + scale * step[j];
      intercept_next = intercept + scale * step[p];
      ll_next = weighted_log_likelihood(x, labels, weights, beta_next, intercept_next);
      if (ll_next >= ll || scale < 1e-8) break;
      scale *= 0.5;
    }
    beta = beta_next;
    intercept = intercept_next;
    ll = ll_next;

    double bmax = std::fabs(intercept);
    for (double b : beta) bmax = std::max(bmax, std::fabs(b));
    if (bmax > config.coefficient_cap) {
      const double shrink = config.coefficient_cap / bmax;
      for (double& b : beta) b *= shrink;
      intercept *= shrink;
      separated = true;
      break;
    }
  }

  Model model;
  model.feature_names = feature_names;
  model.coefficients.resize(p);
  model.intercept = intercept;
  for (size_t j = 0; j < p; ++j) {
    model.coefficients[j] = beta[j] / sd[j];
    model.intercept -= beta[j] * mean[j] / sd[j];
  }
  model.separation_warning = separated;
  model.config = config;
  return model;
}

double predict(const Model& model, const std::vector<double>& feature_values) {
  if (feature_values.size() != model.coefficients.size()) {
    throw std::invalid_argument("feature vector width does not match model");
  }
  return sigmoid(dot_row(feature_values, model.coefficients, model.intercept));
}

double predict_named(const Model& model, const std::vector<std::string>& names,
                     const std::vector<double>& feature_values) {
  if (names != model.feature_names) {
    throw std::runtime_error("feature names do not match model (expected [" +
                             join(model.feature_names, ", ") + "], got [" +
                             join(names, ", ") + "])");
  }
  return predict(model, feature_values);
}

std::vector<RankedPhrase> rank(
    const Model& model,
    const std::vector<std::pair<std::string, std::vector<double>>>& candidates) {
  std::vector<RankedPhrase> ranked;
  ranked.reserve(candidates.size());
  for (const auto& [phrase, values] : candidates) {
    ranked.push_back({phrase, predict(model, values)});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedPhrase& a, const RankedPhrase& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.phrase < b.phrase;
  });
  return ranked;
}

namespace {
constexpr int kModelFormatVersion = 1;
}

void save_model_json(const Model& model, const std::string& path,
                     const std::string& config_hash) {
  json root = {
      {"format_version", kModelFormatVersion},
      {"feature_names", model.feature_names},
      {"coefficients", model.coefficients},
      {"intercept", model.intercept},
      {"separation_warning", model.separation_warning},
      {"training", {{"tolerance", model.config.tolerance},
                    {"max_iterations", model.config.max_iterations},
                    {"coefficient_cap", model.config.coefficient_cap}}},
  };
  if (!config_hash.empty()) root["config_hash"] = config_hash;
  write_text_file(path, root.dump(2) + "\n");
}

Model load_model_json(const std::string& path) {
  json root = json::parse(read_text_file(path));
  if (root.at("format_version").get<int>() != kModelFormatVersion) {
    throw std::runtime_error("unsupported model format version in " + path);
  }
  Model model;
  model.feature_names = root.at("feature_names").get<std::vector<std::string>>();
  model.coefficients = root.at("coefficients").get<std::vector<double>>();
  model.intercept = root.at("intercept").get<double>();
  model.separation_warning = root.value("separation_warning", false);
  const json& tr = root.at("training");
  model.config.tolerance = tr.at("tolerance").get<double>();
  model.config.max_iterations = tr.at("max_iterations").get<int>();
  model.config.coefficient_cap = tr.at("coefficient_cap").get<double>();
  if (model.coefficients.size() != model.feature_names.size()) {
    throw std::runtime_error("model file is inconsistent: " + path);
  }
  return model;
}

}  // namespace kex
