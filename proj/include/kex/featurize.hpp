#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kex/candidates.hpp"
#include "kex/corpus.hpp"
#include "kex/ngram_index.hpp"
#include "kex/term_stats.hpp"

namespace kex {

struct FeatureFamilies {
  bool frequency = true;
  bool commonness = true;
  bool grammar = true;
  bool positional = true;
};

struct MatrixRow {
  std::string doc_id;
  std::string phrase;  // space-joined lowercased tokens
  int label = 0;
  double weight = 1.0;
  std::vector<double> values;
};

struct FeatureMatrix {
  std::vector<std::string> feature_names;
  std::vector<MatrixRow> rows;

  std::vector<size_t> column_indices(const std::vector<std::string>& names) const;
};

// Response counts through the filter stages.
struct FunnelCounts {
  size_t initial = 0;
  size_t after_spurious = 0;
  size_t after_length = 0;
  size_t after_extractive = 0;
  size_t unique_positives = 0;
  size_t negatives = 0;
};

struct FeaturizeOptions {
  size_t max_phrase_words = 5;
  size_t negative_ratio = 10;
  double negative_weight = kNegativeWeight;
  size_t n_max = 5;
  uint64_t seed = 1;
  FeatureFamilies families;
  FreqConfig freq;
};

struct FeaturizeResult {
  FeatureMatrix matrix;
  FunnelCounts funnel;
  size_t docs_without_annotations = 0;  // grammar features degraded to zero
};

std::vector<std::string> feature_column_names(const FeatureFamilies& families);

// Feature values for one (document, phrase) pair, in column order.
std::vector<double> featurize_phrase(const std::vector<std::string>& phrase,
                                     const Document& doc, const NgramIndex& index,
                                     const FeatureFamilies& families,
                                     const FreqConfig& freq);

// Filters responses, collects unique positives, samples negatives, and
// computes every enabled feature family.
FeaturizeResult run_featurize(const Corpus& foreground, const NgramIndex& index,
                              const std::vector<Response>& responses,
                              const std::vector<std::string>& blocklist,
                              const FeaturizeOptions& options);

void save_matrix_csv(const FeatureMatrix& matrix, const std::string& path);
FeatureMatrix load_matrix_csv(const std::string& path);

// JSON-lines dump of the labeled examples (one object per line).
void save_examples_jsonl(const FeatureMatrix& matrix, const std::string& path);

// Replaces the raw commonness column with `bins` one-hot columns. No-op
// when bins == 0.
FeatureMatrix with_binned_commonness(const FeatureMatrix& matrix, size_t bins);

}  // namespace kex
