#include "kex/positional.hpp"

#include <cmath>

#include "kex/candidates.hpp"

namespace kex {

double relative_first_occurrence(double absolute_first, size_t occurrences) {
  return std::pow(1.0 - absolute_first, static_cast<double>(occurrences));
}

PositionalFeatures positional_features(const std::vector<std::string>& phrase,
                                       const Document& doc) {
  PositionalFeatures f;
  const std::vector<TokenRange> spans = find_occurrences(phrase, doc);
  if (spans.empty() || doc.tokens.empty()) {
    return f;  // sentinel (1, 0, 0)
  }
  f.occurrences = spans.size();
  f.absolute_first = static_cast<double>(spans.front().begin) /
                     static_cast<double>(doc.tokens.size());
  f.relative_first = relative_first_occurrence(f.absolute_first, f.occurrences);
  if (!doc.sentences.empty()) {
    const TokenRange& first = doc.sentences.front();
    for (const TokenRange& span : spans) {
      if (first.contains(span)) {
        f.in_first_sentence = 1.0;
        break;
      }
    }
  }
  return f;
}

}  // namespace kex
