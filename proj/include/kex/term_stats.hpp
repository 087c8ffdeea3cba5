#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "kex/corpus.hpp"
#include "kex/ngram_index.hpp"

namespace kex {

// Raw counts backing the frequency statistics. The foreground document is
// not part of the reference corpus, so term_in_doc may exceed term_in_ref;
// the complement counts are clamped at zero.
struct TermStats {
  double term_in_doc = 0;      // occurrences of the term in the document
  double term_in_ref = 0;      // occurrences in the reference corpus
  double doc_tokens = 0;       // word count of the document
  double ref_tokens = 0;       // word count of the reference corpus
  double ref_docs = 0;         // documents in the reference corpus
  double docs_with_term = 0;   // reference documents containing the term
  double avg_doc_tokens = 0;   // mean words per reference document
  double distinct_in_doc = 0;  // distinct same-order terms in the document
  double distinct_in_rest = 0; // distinct same-order terms in the complement scope

  double term_in_rest() const { return std::max(term_in_ref - term_in_doc, 0.0); }
  double tokens_in_rest() const { return std::max(ref_tokens - doc_tokens, 0.0); }
};

struct FreqConfig {
  double bm25_k1 = 2.0;
  double bm25_b = 0.75;
  double smoothing = 0.01;  // increment/floor applied where a zero count would
                            // make a formula undefined
};

// ln(term_in_doc); 0 when the term does not occur in the document.
double log_tf(const TermStats& s);

// (term_in_doc / term_in_ref) * ln(ref_docs / docs_with_term); zero
// reference counts are floored at the smoothing increment.
double tf_idf(const TermStats& s, const FreqConfig& cfg = {});

// Log-likelihood ratio of the in-document rate against the reference rate:
//   2 * ( a*ln(a*R / (S*t)) + a'*ln(a'*R / (S'*t)) )
// with a = term_in_doc over scope S = doc_tokens, a' = term_in_rest over
// S' = tokens_in_rest, t = term_in_ref, R = ref_tokens. Terms with a zero
// leading factor contribute zero; zero denominators are floored.
double g_squared(const TermStats& s, const FreqConfig& cfg = {});

// BM25 with k1 = 2 and b = 0.75 folded in:
//   3*t / (t + 2*(0.25 + 0.75 * doc_tokens/avg_doc_tokens)) * ln(N/D)
double bm25(const TermStats& s, const FreqConfig& cfg = {});

// Variance-normalized log-odds of the document scope against the complement,
// with every term frequency incremented by the smoothing value and scope
// totals recomputed accordingly (total + increment * distinct terms).
double weighted_log_odds(const TermStats& s, const FreqConfig& cfg = {});

struct FreqFeatures {
  double log_tf = 0;
  double tf_idf = 0;
  double g2 = 0;
  double bm25 = 0;
  double log_odds = 0;
};

// Distinct order-n n-grams within the document's sentences.
size_t distinct_ngram_count(const Document& doc, size_t order);

TermStats compute_term_stats(const std::vector<std::string>& phrase, const Document& doc,
                             const NgramIndex& index);

FreqFeatures frequency_features(const std::vector<std::string>& phrase, const Document& doc,
                                const NgramIndex& index, const FreqConfig& cfg = {});

FreqFeatures frequency_features(const TermStats& stats, const FreqConfig& cfg = {});

}  // namespace kex
