#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kex/corpus.hpp"

namespace kex {

// One keyphrase submitted in one assignment.
struct Response {
  std::string doc_id;
  std::string assignment_id;
  std::string phrase;                // raw, as submitted
  std::vector<std::string> tokens;   // tokenized + lowercased
};

struct LabeledExample {
  std::string doc_id;
  std::vector<std::string> phrase;  // 1..5 lowercased tokens
  bool positive = false;
  double weight = 1.0;
};

inline constexpr double kPositiveWeight = 1.0;
inline constexpr double kNegativeWeight = 0.1;

// CSV with header doc_id,assignment_id,phrase. Quoted fields supported.
std::vector<Response> load_responses_csv(const std::string& path);

// One phrase per line; blank lines ignored.
std::vector<std::string> load_blocklist(const std::string& path);

// Drops responses that (a) match a blocklist entry exactly after trimming
// and case folding, (b) equal their document's full title, or (c) equal its
// full abstract text.
std::vector<Response> filter_spurious(const std::vector<Response>& responses,
                                      const std::vector<std::string>& blocklist,
                                      const Corpus& documents);

std::vector<Response> filter_length(const std::vector<Response>& responses,
                                    size_t max_words = 5);

// Keeps responses whose lowercased token sequence occurs contiguously in
// their document. Throws on unknown doc_id.
std::vector<Response> filter_extractive(const std::vector<Response>& responses,
                                        const Corpus& documents);

// True when `phrase` occurs as a contiguous run of lowercased tokens.
bool occurs_in_document(const std::vector<std::string>& phrase, const Document& doc);

// Number of (possibly overlapping) contiguous occurrences.
size_t count_occurrences(const std::vector<std::string>& phrase, const Document& doc);

// Every occurrence span, in document order.
std::vector<TokenRange> find_occurrences(const std::vector<std::string>& phrase,
                                         const Document& doc);

// All distinct lowercased n-grams with 1 <= n <= n_max that lie within a
// single sentence. Space-joined, sorted.
std::vector<std::string> enumerate_ngrams(const Document& doc, size_t n_max = 5);

std::string join_phrase(const std::vector<std::string>& tokens);
std::vector<std::string> split_phrase(const std::string& joined);

// Unique (doc_id, token-sequence) positives from filtered responses, each
// with weight 1.0. Order follows first appearance.
std::vector<LabeledExample> collect_positives(const std::vector<Response>& responses);

// Draws ratio * |positives| distinct (doc, n-gram) pairs, uniformly without
// replacement from the enumeration universe minus the positive pairs.
// Deterministic for a given seed.
std::vector<LabeledExample> sample_negatives(const Corpus& corpus,
                                             const std::vector<LabeledExample>& positives,
                                             size_t ratio, uint64_t seed,
                                             double weight = kNegativeWeight,
                                             size_t n_max = 5);

}  // namespace kex
