#include "kex/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "kex/csv.hpp"
#include "kex/grammar.hpp"
#include "kex/util.hpp"

namespace kex {

Histogram make_histogram(std::string population, std::vector<std::string> labels,
                         std::vector<size_t> counts) {
  Histogram h;
  h.population = std::move(population);
  h.labels = std::move(labels);
  h.counts = std::move(counts);
  for (size_t c : h.counts) h.total += c;
  h.percentages.reserve(h.counts.size());
  for (size_t c : h.counts) {
    h.percentages.push_back(h.total == 0 ? 0.0
                                         : 100.0 * static_cast<double>(c) /
                                               static_cast<double>(h.total));
  }
  return h;
}

Histogram phrase_length_histogram(const std::vector<Response>& responses, size_t cap) {
  std::vector<size_t> counts(cap + 1, 0);  // counts[cap] is the overflow bucket
  for (const Response& r : responses) {
    const size_t len = r.tokens.size();
    if (len == 0) continue;
    if (len > cap) ++counts[cap];
    else ++counts[len - 1];
  }
  std::vector<std::string> labels;
  for (size_t len = 1; len <= cap; ++len) labels.push_back(std::to_string(len));
  labels.push_back(">" + std::to_string(cap));
  return make_histogram("responses", std::move(labels), std::move(counts));
}

Histogram keyphrase_count_histogram(const std::vector<Response>& responses) {
  if (responses.empty()) {
    throw std::runtime_error("keyphrase count histogram needs at least one response");
  }
  std::map<std::string, size_t> per_assignment;
  for (const Response& r : responses) ++per_assignment[r.assignment_id];

  std::map<size_t, size_t> by_count;
  size_t under = 0, over = 0;
  for (const auto& [id, count] : per_assignment) {
    if (count < 5) ++under;
    else if (count > 16) ++over;
    else ++by_count[count];
  }
  std::vector<std::string> labels;
  std::vector<size_t> counts;
  if (under) {
    labels.push_back("<5");
    counts.push_back(under);
  }
  for (size_t c = 5; c <= 16; ++c) {
    labels.push_back(std::to_string(c));
    counts.push_back(by_count.count(c) ? by_count[c] : 0);
  }
  if (over) {
    labels.push_back(">16");
    counts.push_back(over);
  }
  return make_histogram("assignments", std::move(labels), std::move(counts));
}

double extractive_fraction_pct(const std::vector<Response>& responses,
                               const Corpus& documents) {
  if (responses.empty()) return 0.0;
  size_t extractive = 0;
  for (const Response& r : responses) {
    if (occurs_in_document(r.tokens, documents.at(r.doc_id))) ++extractive;
  }
  return 100.0 * static_cast<double>(extractive) / static_cast<double>(responses.size());
}

namespace {

// Unique (doc_id, lowercased token sequence) pairs that occur contiguously
// in their document.
std::vector<std::pair<std::string, std::vector<std::string>>> unique_extractive(
    const std::vector<Response>& responses, const Corpus& documents) {
  std::vector<std::pair<std::string, std::vector<std::string>>> phrases;
  std::unordered_set<std::string> seen;
  for (const Response& r : responses) {
    if (r.tokens.empty()) continue;
    if (!seen.insert(r.doc_id + "\t" + join_phrase(r.tokens)).second) continue;
    if (occurs_in_document(r.tokens, documents.at(r.doc_id))) {
      phrases.emplace_back(r.doc_id, r.tokens);
    }
  }
  return phrases;
}

}  // namespace

FirstSentenceStats first_sentence_stats(const std::vector<Response>& responses,
                                        const Corpus& documents) {
  FirstSentenceStats stats;
  const auto phrases = unique_extractive(responses, documents);
  stats.unique_extractive_phrases = phrases.size();
  size_t in_first = 0;
  for (const auto& [doc_id, tokens] : phrases) {
    const Document& doc = documents.at(doc_id);
    if (doc.sentences.empty()) continue;
    const TokenRange& first = doc.sentences.front();
    for (const TokenRange& span : find_occurrences(tokens, doc)) {
      if (first.contains(span)) {
        ++in_first;
        break;
      }
    }
  }
  if (!phrases.empty()) {
    stats.pct_keyphrases_in_first_sentence =
        100.0 * static_cast<double>(in_first) / static_cast<double>(phrases.size());
  }

  size_t unique_terms = 0, unique_terms_in_first = 0;
  for (const Document& doc : documents.docs()) {
    std::set<std::string> all, first;
    for (const Token& t : doc.tokens) all.insert(t.lower);
    if (!doc.sentences.empty()) {
      const TokenRange& s0 = doc.sentences.front();
      for (size_t i = s0.begin; i < s0.end; ++i) first.insert(doc.tokens[i].lower);
    }
    unique_terms += all.size();
    unique_terms_in_first += first.size();
  }
  if (unique_terms > 0) {
    stats.pct_unique_terms_in_first_sentence =
        100.0 * static_cast<double>(unique_terms_in_first) /
        static_cast<double>(unique_terms);
  }
  return stats;
}

GrammarCategoryStats grammatical_category_fractions(const std::vector<Response>& responses,
                                                    const Corpus& documents) {
  GrammarCategoryStats stats;
  std::unordered_set<std::string> skipped;
  size_t np = 0, vp = 0, tech = 0;
  for (const auto& [doc_id, tokens] : unique_extractive(responses, documents)) {
    const Document& doc = documents.at(doc_id);
    if (!doc.annotations) {
      skipped.insert(doc_id);
      continue;
    }
    ++stats.unique_extractive_phrases;
    const GrammarFeatures f = phrase_grammar_features(tokens, doc);
    if (f.partial_np) ++np;
    if (f.partial_vp) ++vp;
    if (f.partial_technical_term) ++tech;
  }
  stats.docs_skipped = skipped.size();
  if (stats.unique_extractive_phrases > 0) {
    const double denom = static_cast<double>(stats.unique_extractive_phrases);
    stats.pct_partial_np = 100.0 * static_cast<double>(np) / denom;
    stats.pct_partial_vp = 100.0 * static_cast<double>(vp) / denom;
    stats.pct_partial_technical_term = 100.0 * static_cast<double>(tech) / denom;
  }
  return stats;
}

Histogram commonness_histogram(const std::vector<Response>& responses,
                               const NgramIndex& index, uint64_t min_freq_cutoff,
                               size_t num_bins) {
  if (num_bins < 1) throw std::invalid_argument("commonness histogram needs >= 1 bin");
  std::set<std::string> unique_phrases;
  for (const Response& r : responses) {
    if (!r.tokens.empty()) unique_phrases.insert(join_phrase(r.tokens));
  }
  std::vector<size_t> counts(num_bins, 0);
  for (const std::string& phrase : unique_phrases) {
    if (index.lookup(phrase).tf < min_freq_cutoff) continue;
    const double value = commonness(phrase, index);
    size_t bin = static_cast<size_t>(value * static_cast<double>(num_bins));
    if (bin >= num_bins) bin = num_bins - 1;
    ++counts[bin];
  }
  std::vector<std::string> labels;
  for (size_t b = 0; b < num_bins; ++b) {
    const double lo = static_cast<double>(b) / static_cast<double>(num_bins);
    const double hi = static_cast<double>(b + 1) / static_cast<double>(num_bins);
    labels.push_back("[" + format_double(lo) + "," + format_double(hi) +
                     (b + 1 == num_bins ? "]" : ")"));
  }
  return make_histogram("unique phrases (tf_bg >= " + std::to_string(min_freq_cutoff) + ")",
                        std::move(labels), std::move(counts));
}

void save_histogram_csv(const Histogram& histogram, const std::string& path) {
  std::string out = "# population: " + histogram.population + "\n";
  out += "bin,count,percentage\n";
  for (size_t i = 0; i < histogram.labels.size(); ++i) {
    out += csv_row({histogram.labels[i], std::to_string(histogram.counts[i]),
                    format_double(histogram.percentages[i])});
  }
  write_text_file(path, out);
}

}  // namespace kex
