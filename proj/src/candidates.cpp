#include "kex/candidates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "kex/csv.hpp"
#include "kex/util.hpp"

namespace kex {

std::vector<Response> load_responses_csv(const std::string& path) {
  CsvReader reader(path);
  std::vector<std::string> header;
  if (!reader.next_row(header)) {
    throw std::runtime_error("empty responses file: " + path);
  }
  if (header.size() < 3 || header[0] != "doc_id" || header[1] != "assignment_id" ||
      header[2] != "phrase") {
    throw std::runtime_error("responses file must have header doc_id,assignment_id,phrase: " +
                             path);
  }
  std::vector<Response> responses;
  std::vector<std::string> row;
  while (reader.next_row(row)) {
    if (row.empty() || (row.size() == 1 && row[0].empty())) continue;
    if (row.size() < 3) {
      throw std::runtime_error(path + ": short row at line " + std::to_string(reader.line()));
    }
    Response r;
    r.doc_id = row[0];
    r.assignment_id = row[1];
    r.phrase = row[2];
    if (trim(r.phrase).empty()) {
      throw std::runtime_error(path + ": empty phrase at line " + std::to_string(reader.line()));
    }
    for (const Token& t : tokenize(r.phrase)) r.tokens.push_back(t.lower);
    responses.push_back(std::move(r));
  }
  return responses;
}

std::vector<std::string> load_blocklist(const std::string& path) {
  std::vector<std::string> entries;
  std::string content = read_text_file(path);
  size_t pos = 0;
  while (pos <= content.size()) {
    size_t nl = content.find('\n', pos);
    std::string line = nl == std::string::npos ? content.substr(pos)
                                               : content.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!trim(line).empty()) entries.push_back(line);
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return entries;
}

std::vector<Response> filter_spurious(const std::vector<Response>& responses,
                                      const std::vector<std::string>& blocklist,
                                      const Corpus& documents) {
  std::unordered_set<std::string> blocked;
  for (const std::string& entry : blocklist) blocked.insert(ascii_lower(trim(entry)));

  std::vector<Response> kept;
  for (const Response& r : responses) {
    const std::string folded = ascii_lower(trim(r.phrase));
    if (blocked.count(folded)) continue;
    if (const Document* doc = documents.find(r.doc_id)) {
      if (folded == ascii_lower(trim(doc->title))) continue;
      if (folded == ascii_lower(trim(doc->body))) continue;
    }
    kept.push_back(r);
  }
  return kept;
}

std::vector<Response> filter_length(const std::vector<Response>& responses, size_t max_words) {
  std::vector<Response> kept;
  for (const Response& r : responses) {
    if (r.tokens.size() <= max_words) kept.push_back(r);
  }
  return kept;
}

bool occurs_in_document(const std::vector<std::string>& phrase, const Document& doc) {
  if (phrase.empty() || phrase.size() > doc.tokens.size()) return false;
  const size_t m = phrase.size();
  for (size_t i = 0; i + m <= doc.tokens.size(); ++i) {
    bool match = true;
    for (size_t j = 0; j < m; ++j) {
      if (doc.tokens[i + j].lower != phrase[j]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

size_t count_occurrences(const std::vector<std::string>& phrase, const Document& doc) {
  if (phrase.empty() || phrase.size() > doc.tokens.size()) return 0;
  const size_t m = phrase.size();
  size_t count = 0;
  for (size_t i = 0; i + m <= doc.tokens.size(); ++i) {
    bool match = true;
    for (size_t j = 0; j < m; ++j) {
      if (doc.tokens[i + j].lower != phrase[j]) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return count;
}

std::vector<TokenRange> find_occurrences(const std::vector<std::string>& phrase,
                                         const Document& doc) {
  std::vector<TokenRange> spans;
  if (phrase.empty() || phrase.size() > doc.tokens.size()) return spans;
  const size_t m = phrase.size();
  for (size_t i = 0; i + m <= doc.tokens.size(); ++i) {
    bool match = true;
    for (size_t j = 0; j < m; ++j) {
      if (doc.tokens[i + j].lower != phrase[j]) {
        match = false;
        break;
      }
    }
    if (match) spans.push_back({i, i + m});
  }
  return spans;
}

std::vector<Response> filter_extractive(const std::vector<Response>& responses,
                                        const Corpus& documents) {
  std::vector<Response> kept;
  for (const Response& r : responses) {
    const Document& doc = documents.at(r.doc_id);
    if (occurs_in_document(r.tokens, doc)) kept.push_back(r);
  }
  return kept;
}

std::string join_phrase(const std::vector<std::string>& tokens) {
  return join(tokens, " ");
}

std::vector<std::string> split_phrase(const std::string& joined) {
  return split_ws(joined);
}

std::vector<std::string> enumerate_ngrams(const Document& doc, size_t n_max) {
  std::set<std::string> grams;
  for (const TokenRange& sent : doc.sentences) {
    for (size_t i = sent.begin; i < sent.end; ++i) {
      std::string gram;
      for (size_t n = 1; n <= n_max && i + n <= sent.end; ++n) {
        if (n > 1) gram += ' ';
        gram += doc.tokens[i + n - 1].lower;
        grams.insert(gram);
      }
    }
  }
  return std::vector<std::string>(grams.begin(), grams.end());
}

std::vector<LabeledExample> collect_positives(const std::vector<Response>& responses) {
  std::vector<LabeledExample> positives;
  std::unordered_set<std::string> seen;
  for (const Response& r : responses) {
    std::string key = r.doc_id + "\t" + join_phrase(r.tokens);
    if (!seen.insert(key).second) continue;
    LabeledExample ex;
    ex.doc_id = r.doc_id;
    ex.phrase = r.tokens;
    ex.positive = true;
    ex.weight = kPositiveWeight;
    positives.push_back(std::move(ex));
  }
  return positives;
}

std::vector<LabeledExample> sample_negatives(const Corpus& corpus,
                                             const std::vector<LabeledExample>& positives,
                                             size_t ratio, uint64_t seed, double weight,
                                             size_t n_max) {
  if (ratio < 1) throw std::invalid_argument("negative ratio must be >= 1");

  std::unordered_set<std::string> positive_keys;
  for (const LabeledExample& p : positives) {
    positive_keys.insert(p.doc_id + "\t" + join_phrase(p.phrase));
  }

  // Universe in sorted (doc, gram) order so the draw depends only on seed.
  std::vector<std::pair<std::string, std::string>> universe;
  for (const Document& doc : corpus.docs()) {
    for (std::string& gram : enumerate_ngrams(doc, n_max)) {
      if (!positive_keys.count(doc.id + "\t" + gram)) {
        universe.emplace_back(doc.id, std::move(gram));
      }
    }
  }
  std::sort(universe.begin(), universe.end());

  const size_t wanted = ratio * positives.size();
  if (universe.size() < wanted) {
    throw std::runtime_error("not enough distinct n-grams for negative sampling: need " +
                             std::to_string(wanted) + ", universe has " +
                             std::to_string(universe.size()) + " (short by " +
                             std::to_string(wanted - universe.size()) + ")");
  }

  // Partial Fisher-Yates: after i steps the first i slots are the sample.
  Rng rng(seed);
  for (size_t i = 0; i < wanted; ++i) {
    size_t j = i + static_cast<size_t>(rng.next_below(universe.size() - i));
    std::swap(universe[i], universe[j]);
  }

  std::vector<LabeledExample> negatives;
  negatives.reserve(wanted);
  for (size_t i = 0; i < wanted; ++i) {
    LabeledExample ex;
    ex.doc_id = universe[i].first;
    ex.phrase = split_phrase(universe[i].second);
    ex.positive = false;
    ex.weight = weight;
    negatives.push_back(std::move(ex));
  }
  return negatives;
}

}  // namespace kex
