#include "kex/featurize.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "kex/csv.hpp"
#include "kex/grammar.hpp"
#include "kex/positional.hpp"
#include "kex/util.hpp"

using nlohmann::json;

namespace kex {

std::vector<size_t> FeatureMatrix::column_indices(
    const std::vector<std::string>& names) const {
  std::vector<size_t> indices;
  indices.reserve(names.size());
  for (const std::string& name : names) {
    auto it = std::find(feature_names.begin(), feature_names.end(), name);
    if (it == feature_names.end()) {
      throw std::runtime_error("feature matrix has no column '" + name + "'");
    }
    indices.push_back(static_cast<size_t>(it - feature_names.begin()));
  }
  return indices;
}

std::vector<std::string> feature_column_names(const FeatureFamilies& families) {
  std::vector<std::string> names;
  if (families.frequency) {
    names.insert(names.end(), {"log_tf", "tf_idf", "g2", "bm25", "log_odds"});
  }
  if (families.commonness) names.push_back("commonness");
  if (families.grammar) {
    for (const std::string& n : grammar_feature_names()) names.push_back(n);
  }
  if (families.positional) {
    names.insert(names.end(),
                 {"abs_first_occurrence", "rel_first_occurrence", "in_first_sentence"});
  }
  return names;
}

std::vector<double> featurize_phrase(const std::vector<std::string>& phrase,
                                     const Document& doc, const NgramIndex& index,
                                     const FeatureFamilies& families,
                                     const FreqConfig& freq) {
  std::vector<double> values;
  if (families.frequency) {
    const FreqFeatures f = frequency_features(phrase, doc, index, freq);
    values.insert(values.end(), {f.log_tf, f.tf_idf, f.g2, f.bm25, f.log_odds});
  }
  if (families.commonness) {
    values.push_back(commonness(join_phrase(phrase), index));
  }
  if (families.grammar) {
    const GrammarFeatures g = phrase_grammar_features(phrase, doc);
    const auto v = g.values();
    values.insert(values.end(), v.begin(), v.end());
  }
  if (families.positional) {
    const PositionalFeatures p = positional_features(phrase, doc);
    values.insert(values.end(), {p.absolute_first, p.relative_first, p.in_first_sentence});
  }
  return values;
}

FeaturizeResult run_featurize(const Corpus& foreground, const NgramIndex& index,
                              const std::vector<Response>& responses,
                              const std::vector<std::string>& blocklist,
                              const FeaturizeOptions& options) {
  FeaturizeResult result;
  FunnelCounts& funnel = result.funnel;

  funnel.initial = responses.size();
  std::vector<Response> stage = filter_spurious(responses, blocklist, foreground);
  funnel.after_spurious = stage.size();
  stage = filter_length(stage, options.max_phrase_words);
  funnel.after_length = stage.size();
  stage = filter_extractive(stage, foreground);
  funnel.after_extractive = stage.size();

  std::vector<LabeledExample> examples = collect_positives(stage);
  funnel.unique_positives = examples.size();

  std::vector<LabeledExample> negatives =
      sample_negatives(foreground, examples, options.negative_ratio, options.seed,
                       options.negative_weight, options.n_max);
  funnel.negatives = negatives.size();
  examples.insert(examples.end(), std::make_move_iterator(negatives.begin()),
                  std::make_move_iterator(negatives.end()));

  if (options.families.grammar) {
    for (const Document& doc : foreground.docs()) {
      if (!doc.annotations) ++result.docs_without_annotations;
    }
  }

  result.matrix.feature_names = feature_column_names(options.families);
  result.matrix.rows.reserve(examples.size());
  for (const LabeledExample& ex : examples) {
    MatrixRow row;
    row.doc_id = ex.doc_id;
    row.phrase = join_phrase(ex.phrase);
    row.label = ex.positive ? 1 : 0;
    row.weight = ex.weight;
    row.values = featurize_phrase(ex.phrase, foreground.at(ex.doc_id), index,
                                  options.families, options.freq);
    result.matrix.rows.push_back(std::move(row));
  }
  return result;
}

void save_matrix_csv(const FeatureMatrix& matrix, const std::string& path) {
  std::string out;
  std::vector<std::string> header = {"doc_id", "phrase", "label", "weight"};
  header.insert(header.end(), matrix.feature_names.begin(), matrix.feature_names.end());
  out += csv_row(header);
  std::vector<std::string> fields;
  for (const MatrixRow& row : matrix.rows) {
    fields.clear();
    fields.push_back(row.doc_id);
    fields.push_back(row.phrase);
    fields.push_back(row.label ? "1" : "0");
    fields.push_back(format_double(row.weight));
    for (double v : row.values) fields.push_back(format_double(v));
    out += csv_row(fields);
  }
  write_text_file(path, out);
}

FeatureMatrix load_matrix_csv(const std::string& path) {
  CsvReader reader(path);
  std::vector<std::string> header;
  if (!reader.next_row(header) || header.size() < 4 || header[0] != "doc_id" ||
      header[1] != "phrase" || header[2] != "label" || header[3] != "weight") {
    throw std::runtime_error("feature matrix must start with doc_id,phrase,label,weight: " +
                             path);
  }
  FeatureMatrix matrix;
  matrix.feature_names.assign(header.begin() + 4, header.end());
  std::vector<std::string> row;
  while (reader.next_row(row)) {
    if (row.size() != header.size()) {
      throw std::runtime_error(path + ": row width mismatch at line " +
                               std::to_string(reader.line()));
    }
    MatrixRow r;
    r.doc_id = row[0];
    r.phrase = row[1];
    r.label = row[2] == "1" ? 1 : 0;
    r.weight = std::stod(row[3]);
    r.values.reserve(matrix.feature_names.size());
    for (size_t j = 4; j < row.size(); ++j) r.values.push_back(std::stod(row[j]));
    matrix.rows.push_back(std::move(r));
  }
  return matrix;
}

void save_examples_jsonl(const FeatureMatrix& matrix, const std::string& path) {
  std::string out;
  for (const MatrixRow& row : matrix.rows) {
    json obj = {
        {"doc_id", row.doc_id},
        {"phrase", split_phrase(row.phrase)},
        {"label", row.label ? "positive" : "negative"},
        {"weight", row.weight},
    };
    json features = json::object();
    for (size_t j = 0; j < matrix.feature_names.size(); ++j) {
      features[matrix.feature_names[j]] = row.values[j];
    }
    obj["features"] = features;
    out += obj.dump();
    out += '\n';
  }
  write_text_file(path, out);
}

FeatureMatrix with_binned_commonness(const FeatureMatrix& matrix, size_t bins) {
  if (bins == 0) return matrix;
  const size_t col = matrix.column_indices({"commonness"})[0];

  FeatureMatrix out;
  for (size_t j = 0; j < matrix.feature_names.size(); ++j) {
    if (j == col) {
      for (size_t b = 0; b < bins; ++b) {
        out.feature_names.push_back("commonness_bin_" + std::to_string(b));
      }
    } else {
      out.feature_names.push_back(matrix.feature_names[j]);
    }
  }
  out.rows.reserve(matrix.rows.size());
  for (const MatrixRow& row : matrix.rows) {
    MatrixRow r;
    r.doc_id = row.doc_id;
    r.phrase = row.phrase;
    r.label = row.label;
    r.weight = row.weight;
    r.values.reserve(row.values.size() + bins - 1);
    for (size_t j = 0; j < row.values.size(); ++j) {
      if (j == col) {
        const std::vector<double> one_hot = bin_commonness(row.values[j], bins);
        r.values.insert(r.values.end(), one_hot.begin(), one_hot.end());
      } else {
        r.values.push_back(row.values[j]);
      }
    }
    out.rows.push_back(std::move(r));
  }
  return out;
}

}  // namespace kex
