#include "kex/text.hpp"

namespace kex {

namespace {

bool is_word_byte(unsigned char c) {
  if (c >= 0x80) return true;
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

char fold(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool is_ascii_lower(unsigned char c) { return c >= 'a' && c <= 'z'; }

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (!is_word_byte(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t begin = i;
    while (i < n) {
      if (is_word_byte(static_cast<unsigned char>(text[i]))) {
        ++i;
      } else if (text[i] == '-' && i + 1 < n &&
                 is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
        // internal hyphen between two word characters
        i += 2;
      } else {
        break;
      }
    }
    Token tok;
    tok.surface = std::string(text.substr(begin, i - begin));
    tok.lower.reserve(tok.surface.size());
    for (char c : tok.surface) tok.lower.push_back(fold(c));
    tok.begin = begin;
    tok.end = i;
    tok.index = tokens.size();
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

const std::vector<std::string>& sentence_abbreviations() {
  static const std::vector<std::string> abbrevs = {
      "e.g.", "i.e.", "et al.", "Fig.", "vs.", "cf.", "Dr.", "No.",
  };
  return abbrevs;
}

namespace {

// True when the terminator at `pos` closes one of the known abbreviations,
// i.e. text[..pos] ends with the abbreviation at a word boundary.
bool closes_abbreviation(std::string_view text, size_t pos) {
  for (const std::string& abbr : sentence_abbreviations()) {
    const size_t len = abbr.size();
    if (pos + 1 < len) continue;
    const size_t start = pos + 1 - len;
    if (text.substr(start, len) != abbr) continue;
    if (start == 0 || !is_word_byte(static_cast<unsigned char>(text[start - 1]))) {
      return true;
    }
  }
  return false;
}

// A terminator opens a new sentence unless the next letter/digit is ASCII
// lowercase. End of text always qualifies.
bool next_word_char_qualifies(std::string_view text, size_t pos) {
  for (size_t j = pos + 1; j < text.size(); ++j) {
    if (is_word_byte(static_cast<unsigned char>(text[j]))) {
      return !is_ascii_lower(static_cast<unsigned char>(text[j]));
    }
  }
  return true;
}

bool boundary_in_gap(std::string_view text, size_t gap_begin, size_t gap_end) {
  for (size_t p = gap_begin; p < gap_end; ++p) {
    if (!is_terminator(text[p])) continue;
    if (closes_abbreviation(text, p)) continue;
    if (next_word_char_qualifies(text, p)) return true;
  }
  return false;
}

}  // namespace

std::vector<TokenRange> segment_sentences(const std::vector<Token>& tokens,
                                          std::string_view text) {
  std::vector<TokenRange> sentences;
  if (tokens.empty()) return sentences;
  size_t start = 0;
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (boundary_in_gap(text, tokens[i].end, tokens[i + 1].begin)) {
      sentences.push_back({start, i + 1});
      start = i + 1;
    }
  }
  sentences.push_back({start, tokens.size()});
  return sentences;
}

}  // namespace kex
