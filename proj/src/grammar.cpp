#include "kex/grammar.hpp"

#include "kex/candidates.hpp"

namespace kex {

bool is_adjective_tag(const std::string& tag) {
  return tag == "JJ" || tag == "JJR" || tag == "JJS";
}

bool is_noun_tag(const std::string& tag) {
  return tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS";
}

bool is_cardinal_tag(const std::string& tag) { return tag == "CD"; }

namespace {

bool is_adj_or_noun(const std::string& tag) {
  return is_adjective_tag(tag) || is_noun_tag(tag);
}

}  // namespace

bool match_technical_term(std::span<const std::string> tags) {
  const size_t n = tags.size();
  if (n == 0) return false;
  if (n == 1) return is_noun_tag(tags[0]);
  // (A|N)+ (N|C)
  for (size_t i = 0; i + 1 < n; ++i) {
    if (!is_adj_or_noun(tags[i])) return false;
  }
  return is_noun_tag(tags[n - 1]) || is_cardinal_tag(tags[n - 1]);
}

bool match_compound_technical_term(std::span<const std::string> tokens,
                                   std::span<const std::string> tags) {
  const size_t n = tags.size();
  if (n == 0 || tokens.size() != n) return false;
  if (match_technical_term(tags)) return true;
  // (A|N)* N "of" (T|C): try every position for the noun before "of".
  for (size_t i = 0; i + 2 < n; ++i) {
    if (!is_noun_tag(tags[i])) {
      if (!is_adj_or_noun(tags[i])) break;  // prefix must stay within (A|N)*
      continue;
    }
    if (tokens[i + 1] != "of") {
      continue;
    }
    std::span<const std::string> rest_tags = tags.subspan(i + 2);
    if (match_technical_term(rest_tags)) return true;
    if (rest_tags.size() == 1 && is_cardinal_tag(rest_tags[0])) return true;
  }
  return false;
}

std::array<double, 10> GrammarFeatures::values() const {
  return {
      full_np ? 1.0 : 0.0,
      full_vp ? 1.0 : 0.0,
      partial_np ? 1.0 : 0.0,
      partial_vp ? 1.0 : 0.0,
      optional_leading_word ? 1.0 : 0.0,
      head_noun ? 1.0 : 0.0,
      technical_term ? 1.0 : 0.0,
      compound_technical_term ? 1.0 : 0.0,
      partial_technical_term ? 1.0 : 0.0,
      partial_compound_technical_term ? 1.0 : 0.0,
  };
}

GrammarFeatures& GrammarFeatures::operator|=(const GrammarFeatures& other) {
  full_np |= other.full_np;
  full_vp |= other.full_vp;
  partial_np |= other.partial_np;
  partial_vp |= other.partial_vp;
  optional_leading_word |= other.optional_leading_word;
  head_noun |= other.head_noun;
  technical_term |= other.technical_term;
  compound_technical_term |= other.compound_technical_term;
  partial_technical_term |= other.partial_technical_term;
  partial_compound_technical_term |= other.partial_compound_technical_term;
  return *this;
}

const std::array<std::string, 10>& grammar_feature_names() {
  static const std::array<std::string, 10> names = {
      "is_full_np",
      "is_full_vp",
      "is_partial_np",
      "is_partial_vp",
      "is_optional_leading_word",
      "is_head_noun",
      "is_technical_term",
      "is_compound_technical_term",
      "is_partial_technical_term",
      "is_partial_compound_technical_term",
  };
  return names;
}

namespace {

bool span_matches(const Document& doc, const AnnotationLayer& layer, size_t begin,
                  size_t end, bool compound) {
  std::vector<std::string> tags(layer.pos_tags.begin() + begin,
                                layer.pos_tags.begin() + end);
  if (!compound) return match_technical_term(tags);
  std::vector<std::string> tokens;
  tokens.reserve(end - begin);
  for (size_t i = begin; i < end; ++i) tokens.push_back(doc.tokens[i].lower);
  return match_compound_technical_term(tokens, tags);
}

}  // namespace

std::vector<TokenRange> maximal_technical_spans(const Document& doc,
                                                const AnnotationLayer& layer,
                                                const TokenRange& bounds, bool compound) {
  std::vector<TokenRange> matches;
  for (size_t b = bounds.begin; b < bounds.end; ++b) {
    for (size_t e = b + 1; e <= bounds.end; ++e) {
      if (span_matches(doc, layer, b, e, compound)) matches.push_back({b, e});
    }
  }
  std::vector<TokenRange> maximal;
  for (const TokenRange& m : matches) {
    bool contained = false;
    for (const TokenRange& other : matches) {
      if (other == m) continue;
      if (other.contains(m)) {
        contained = true;
        break;
      }
    }
    if (!contained) maximal.push_back(m);
  }
  return maximal;
}

GrammarFeatures span_grammar_features(const Document& doc, const TokenRange& span,
                                      const AnnotationLayer& layer) {
  GrammarFeatures f;
  if (span.size() == 0 || span.end > layer.pos_tags.size()) return f;

  for (const TokenRange& np : layer.np_chunks) {
    if (np == span) f.full_np = true;
    if (np.contains(span)) f.partial_np = true;
    if (np.begin == span.begin) {
      const std::string& tag = layer.pos_tags[span.begin];
      if (tag == "CD" || tag == "DT" || tag == "PDT") f.optional_leading_word = true;
    }
    if (np.end == span.end) f.head_noun = true;
  }
  for (const TokenRange& vp : layer.vp_chunks) {
    if (vp == span) f.full_vp = true;
    if (vp.contains(span)) f.partial_vp = true;
  }

  f.technical_term = span_matches(doc, layer, span.begin, span.end, false);
  f.compound_technical_term = span_matches(doc, layer, span.begin, span.end, true);

  f.partial_technical_term = f.technical_term;
  f.partial_compound_technical_term = f.compound_technical_term;
  for (const TokenRange& sent : doc.sentences) {
    if (!sent.contains(span)) continue;
    if (!f.partial_technical_term) {
      for (const TokenRange& m : maximal_technical_spans(doc, layer, sent, false)) {
        if (m.contains(span)) {
          f.partial_technical_term = true;
          break;
        }
      }
    }
    if (!f.partial_compound_technical_term) {
      for (const TokenRange& m : maximal_technical_spans(doc, layer, sent, true)) {
        if (m.contains(span)) {
          f.partial_compound_technical_term = true;
          break;
        }
      }
    }
    break;
  }
  return f;
}

GrammarFeatures phrase_grammar_features(const std::vector<std::string>& phrase,
                                        const Document& doc) {
  GrammarFeatures f;
  if (!doc.annotations) return f;
  for (const TokenRange& span : find_occurrences(phrase, doc)) {
    f |= span_grammar_features(doc, span, *doc.annotations);
  }
  return f;
}

}  // namespace kex
