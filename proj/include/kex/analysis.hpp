#pragma once

#include <string>
#include <vector>

#include "kex/candidates.hpp"
#include "kex/corpus.hpp"
#include "kex/ngram_index.hpp"

namespace kex {

struct Histogram {
  std::string population;  // which response set the rows were computed over
  std::vector<std::string> labels;
  std::vector<size_t> counts;
  std::vector<double> percentages;
  size_t total = 0;
};

Histogram make_histogram(std::string population, std::vector<std::string> labels,
                         std::vector<size_t> counts);

// Word-length distribution with an overflow bucket above `cap`.
Histogram phrase_length_histogram(const std::vector<Response>& responses, size_t cap = 10);

// Keyphrases submitted per assignment. Bins cover 5..16 with under/overflow
// buckets added only when needed. Throws on an empty response set.
Histogram keyphrase_count_histogram(const std::vector<Response>& responses);

// Percentage of responses whose token sequence occurs contiguously in their
// document.
double extractive_fraction_pct(const std::vector<Response>& responses,
                               const Corpus& documents);

struct FirstSentenceStats {
  double pct_keyphrases_in_first_sentence = 0.0;  // over unique extractive phrases
  double pct_unique_terms_in_first_sentence = 0.0;  // distinct unigrams, corpus-wide
  size_t unique_extractive_phrases = 0;
};

FirstSentenceStats first_sentence_stats(const std::vector<Response>& responses,
                                        const Corpus& documents);

struct GrammarCategoryStats {
  double pct_partial_np = 0.0;
  double pct_partial_vp = 0.0;
  double pct_partial_technical_term = 0.0;
  size_t unique_extractive_phrases = 0;  // in annotated documents
  size_t docs_skipped = 0;               // lacked an annotation layer
};

// Fractions of unique extractive keyphrases that sit inside an NP chunk, a
// VP chunk, or a technical-term match. They may sum to more than 100.
GrammarCategoryStats grammatical_category_fractions(const std::vector<Response>& responses,
                                                    const Corpus& documents);

// Commonness distribution of unique phrases; terms with a background
// frequency below the cutoff are excluded first.
Histogram commonness_histogram(const std::vector<Response>& responses,
                               const NgramIndex& index, uint64_t min_freq_cutoff = 0,
                               size_t num_bins = 20);

void save_histogram_csv(const Histogram& histogram, const std::string& path);

}  // namespace kex
