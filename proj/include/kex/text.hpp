#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kex {

struct Token {
  std::string surface;   // original spelling
  std::string lower;     // ASCII-case-folded spelling, used for all matching
  size_t begin = 0;      // byte offset into the source text
  size_t end = 0;        // one past the last byte
  size_t index = 0;      // word position, 0-based
};

// Half-open token index range [begin, end).
struct TokenRange {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool contains(const TokenRange& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool operator==(const TokenRange& other) const = default;
};

// Tokens are maximal runs of letters/digits; a hyphen joins two such runs
// into one token ("state-of-the-art"). All other punctuation separates.
// Bytes >= 0x80 (UTF-8 continuations and non-ASCII starts) count as word
// characters; case folding is ASCII-only.
std::vector<Token> tokenize(std::string_view text);

// Sentence boundaries fall after '.', '!' or '?' when the terminator does
// not close a known abbreviation and the next letter or digit is not an
// ASCII lowercase letter. The returned ranges partition [0, tokens.size()).
std::vector<TokenRange> segment_sentences(const std::vector<Token>& tokens,
                                          std::string_view text);

const std::vector<std::string>& sentence_abbreviations();

}  // namespace kex
