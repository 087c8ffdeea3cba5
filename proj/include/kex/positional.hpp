#pragma once

#include <string>
#include <vector>

#include "kex/corpus.hpp"

namespace kex {

struct PositionalFeatures {
  double absolute_first = 1.0;  // first-occurrence word index / document length
  double relative_first = 0.0;  // (1 - absolute_first)^occurrences
  double in_first_sentence = 0.0;
  size_t occurrences = 0;
};

double relative_first_occurrence(double absolute_first, size_t occurrences);

// Phrases absent from the document get the "maximally late, never occurs"
// sentinel (1, 0, 0).
PositionalFeatures positional_features(const std::vector<std::string>& phrase,
                                       const Document& doc);

}  // namespace kex
