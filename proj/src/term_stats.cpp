#include "kex/term_stats.hpp"

#include <cmath>
#include <set>

#include "kex/candidates.hpp"

namespace kex {

namespace {

double floor_at(double value, double eps) { return value > 0.0 ? value : eps; }

// One side of the log-likelihood ratio. `count` observed in `scope_total`,
// compared against rate `ref_count` / `ref_total`.
double llr_component(double count, double scope_total, double ref_count,
                     double ref_total, double eps) {
  if (count <= 0.0) return 0.0;  // lim x->0 of x*ln(x...) is 0
  const double scope = floor_at(scope_total, eps);
  const double ref_c = floor_at(ref_count, eps);
  const double ref_t = floor_at(ref_total, eps);
  return count * std::log(count * ref_t / (scope * ref_c));
}

}  // namespace

double log_tf(const TermStats& s) {
  if (s.term_in_doc < 1.0) return 0.0;
  return std::log(s.term_in_doc);
}

double tf_idf(const TermStats& s, const FreqConfig& cfg) {
  if (s.term_in_doc <= 0.0) return 0.0;
  const double t_ref = floor_at(s.term_in_ref, cfg.smoothing);
  const double docs = floor_at(s.docs_with_term, cfg.smoothing);
  const double n = floor_at(s.ref_docs, cfg.smoothing);
  return s.term_in_doc / t_ref * std::log(n / docs);
}

double g_squared(const TermStats& s, const FreqConfig& cfg) {
  const double in_doc = llr_component(s.term_in_doc, s.doc_tokens, s.term_in_ref,
                                      s.ref_tokens, cfg.smoothing);
  const double in_rest = llr_component(s.term_in_rest(), s.tokens_in_rest(),
                                       s.term_in_ref, s.ref_tokens, cfg.smoothing);
  return 2.0 * (in_doc + in_rest);
}

double bm25(const TermStats& s, const FreqConfig& cfg) {
  if (s.term_in_doc <= 0.0) return 0.0;
  const double avg = floor_at(s.avg_doc_tokens, cfg.smoothing);
  const double k1 = cfg.bm25_k1;
  const double b = cfg.bm25_b;
  const double tf_part = (k1 + 1.0) * s.term_in_doc /
                         (s.term_in_doc + k1 * (1.0 - b + b * s.doc_tokens / avg));
  const double docs = floor_at(s.docs_with_term, cfg.smoothing);
  const double n = floor_at(s.ref_docs, cfg.smoothing);
  return tf_part * std::log(n / docs);
}

double weighted_log_odds(const TermStats& s, const FreqConfig& cfg) {
  const double eps = cfg.smoothing;
  const double t_doc = s.term_in_doc + eps;
  const double t_rest = s.term_in_rest() + eps;
  const double total_doc = s.doc_tokens + eps * s.distinct_in_doc;
  const double total_rest = s.tokens_in_rest() + eps * s.distinct_in_rest;
  const double numerator = std::log(t_doc / t_rest) - std::log(total_doc / total_rest);
  const double denominator = std::sqrt(1.0 / t_doc + 1.0 / t_rest);
  return numerator / denominator;
}

size_t distinct_ngram_count(const Document& doc, size_t order) {
  if (order == 0) return 0;
  std::set<std::string> grams;
  for (const TokenRange& sent : doc.sentences) {
    if (sent.size() < order) continue;
    for (size_t i = sent.begin; i + order <= sent.end; ++i) {
      std::string gram = doc.tokens[i].lower;
      for (size_t j = 1; j < order; ++j) {
        gram += ' ';
        gram += doc.tokens[i + j].lower;
      }
      grams.insert(std::move(gram));
    }
  }
  return grams.size();
}

TermStats compute_term_stats(const std::vector<std::string>& phrase, const Document& doc,
                             const NgramIndex& index) {
  TermStats s;
  s.term_in_doc = static_cast<double>(count_occurrences(phrase, doc));
  s.doc_tokens = static_cast<double>(doc.tokens.size());
  const NgramIndex::Entry entry = index.lookup(join_phrase(phrase));
  s.term_in_ref = static_cast<double>(entry.tf);
  s.docs_with_term = static_cast<double>(entry.df);
  s.ref_tokens = static_cast<double>(index.total_tokens());
  s.ref_docs = static_cast<double>(index.document_count());
  s.avg_doc_tokens = index.avg_doc_tokens();
  s.distinct_in_doc = static_cast<double>(distinct_ngram_count(doc, phrase.size()));
  s.distinct_in_rest = static_cast<double>(index.vocabulary_size(phrase.size()));
  return s;
}

FreqFeatures frequency_features(const TermStats& stats, const FreqConfig& cfg) {
  FreqFeatures f;
  f.log_tf = log_tf(stats);
  f.tf_idf = tf_idf(stats, cfg);
  f.g2 = g_squared(stats, cfg);
  f.bm25 = bm25(stats, cfg);
  f.log_odds = weighted_log_odds(stats, cfg);
  return f;
}

FreqFeatures frequency_features(const std::vector<std::string>& phrase, const Document& doc,
                                const NgramIndex& index, const FreqConfig& cfg) {
  return frequency_features(compute_term_stats(phrase, doc, index), cfg);
}

}  // namespace kex
