#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "kex/corpus.hpp"

namespace kex {

// Background-corpus n-gram frequency table. Keys are lowercased,
// space-joined n-grams; counting stays within sentence boundaries, matching
// candidate enumeration.
class NgramIndex {
 public:
  struct Entry {
    uint64_t tf = 0;  // total occurrences in the background corpus
    uint64_t df = 0;  // number of documents containing the n-gram
  };

  static NgramIndex build(const Corpus& background, size_t n_max = 5);

  size_t n_max() const { return maps_.size(); }
  uint64_t document_count() const { return document_count_; }  // N
  uint64_t total_tokens() const { return total_tokens_; }      // T_ref
  double avg_doc_tokens() const;                               // r

  // Zero-filled entry for unseen terms.
  Entry lookup(const std::string& term) const;
  uint64_t tf_max(size_t order) const;

  // Distinct terms of the given order (the order-n vocabulary size).
  uint64_t vocabulary_size(size_t order) const;

  // Versioned, checksummed JSON. Loading rejects unknown versions and any
  // payload whose checksum does not match.
  void save(const std::string& path) const;
  static NgramIndex load(const std::string& path);

 private:
  std::vector<std::unordered_map<std::string, Entry>> maps_;  // maps_[n-1]
  std::vector<uint64_t> tf_max_;                              // tf_max_[n-1]
  uint64_t document_count_ = 0;
  uint64_t total_tokens_ = 0;
};

// log(tf_bg) / log(tf_max) for terms seen in the background; 0 for unseen
// terms, 1 for the most frequent term of the order. When tf_max is 1 every
// seen term is "the most frequent", so the value is 1.
double commonness(const std::string& term, const NgramIndex& index);

// Equal-width one-hot binning over [0, 1]; value 1.0 lands in the last bin.
size_t commonness_bin(double value, size_t num_bins);
std::vector<double> bin_commonness(double value, size_t num_bins);

}  // namespace kex
