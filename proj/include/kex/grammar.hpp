#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "kex/corpus.hpp"

namespace kex {

// Tag classes of the technical-term productions:
//   T = (A|N)+ (N|C) | N
//   X = (A|N)* N "of" (T|C) | T
// where A covers JJ/JJR/JJS, N covers NN/NNS/NNP/NNPS, C is CD, and "of"
// is a literal token (matched on the lowercased spelling, any tag).
bool is_adjective_tag(const std::string& tag);
bool is_noun_tag(const std::string& tag);
bool is_cardinal_tag(const std::string& tag);

// Whole sequence derivable from T.
bool match_technical_term(std::span<const std::string> tags);

// Whole sequence derivable from X. `tokens` are lowercased spellings.
bool match_compound_technical_term(std::span<const std::string> tokens,
                                   std::span<const std::string> tags);

struct GrammarFeatures {
  bool full_np = false;
  bool full_vp = false;
  bool partial_np = false;
  bool partial_vp = false;
  bool optional_leading_word = false;
  bool head_noun = false;
  bool technical_term = false;
  bool compound_technical_term = false;
  bool partial_technical_term = false;
  bool partial_compound_technical_term = false;

  std::array<double, 10> values() const;
  GrammarFeatures& operator|=(const GrammarFeatures& other);
};

const std::array<std::string, 10>& grammar_feature_names();

// Features for one token span. Full NP/VP means exact chunk equality,
// partial means containment in a chunk. "Partial technical" means the span
// is contained in a maximal T match within its sentence (a span that itself
// matches T always counts, including spans that straddle sentences).
GrammarFeatures span_grammar_features(const Document& doc, const TokenRange& span,
                                      const AnnotationLayer& layer);

// Union over all occurrence spans of the phrase in the document. All-zero
// when the document has no annotation layer or the phrase does not occur.
GrammarFeatures phrase_grammar_features(const std::vector<std::string>& phrase,
                                        const Document& doc);

// Maximal spans within [begin, end) matching T (or X), used by the partial
// features. A match is maximal when no strictly larger matching span within
// the same bounds contains it.
std::vector<TokenRange> maximal_technical_spans(const Document& doc,
                                                const AnnotationLayer& layer,
                                                const TokenRange& bounds, bool compound);

}  // namespace kex
