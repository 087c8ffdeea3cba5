#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kex/candidates.hpp"
#include "test_helpers.hpp"

using namespace kex;

namespace {

Response make_response(const std::string& doc_id, const std::string& phrase,
                       const std::string& assignment = "a") {
  Response r;
  r.doc_id = doc_id;
  r.assignment_id = assignment;
  r.phrase = phrase;
  for (const Token& t : tokenize(phrase)) r.tokens.push_back(t.lower);
  return r;
}

Corpus tiny_corpus() {
  Corpus corpus;
  corpus.add(make_document("t1", "Fast lookup\nDistributed hash tables provide fast "
                                 "lookup. Routing stays simple."));
  corpus.add(make_document("t2", "Cache design\nThe cache keeps popular objects."));
  return corpus;
}

}  // namespace

TEST_CASE("spurious filter removes blocklist entries, titles and abstracts") {
  Corpus corpus = tiny_corpus();
  std::vector<std::string> blocklist = {"N/A", "keyword"};
  std::vector<Response> responses = {
      make_response("t1", "N/A"),
      make_response("t1", "  n/a "),     // trimmed + folded match
      make_response("t1", "KEYWORD"),
      make_response("t1", "distributed hash table"),
      make_response("t1", "Fast lookup"),  // equals the title
      make_response("t2", "The cache keeps popular objects."),  // equals the abstract
  };
  auto kept = filter_spurious(responses, blocklist, corpus);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].phrase == "distributed hash table");
}

TEST_CASE("length filter keeps five words, drops six") {
  std::vector<Response> responses = {
      make_response("t1", "one two three four five six"),
      make_response("t1", "one two three four five"),
      make_response("t1", "one"),
  };
  auto kept = filter_length(responses);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].tokens.size() == 5);
}

TEST_CASE("extractive filter requires a contiguous match") {
  Corpus corpus = tiny_corpus();
  std::vector<Response> responses = {
      make_response("t1", "Distributed Hash Tables"),   // case-insensitive hit
      make_response("t1", "distributed tables"),        // not contiguous
      make_response("t1", "hash tables provide"),       // crosses chunk, still contiguous
      make_response("t2", "popular objects"),
  };
  auto kept = filter_extractive(responses, corpus);
  REQUIRE(kept.size() == 3);
  CHECK_THROWS_AS(filter_extractive({make_response("zz", "x")}, corpus),
                  std::runtime_error);
}

TEST_CASE("extractive filter agrees with a brute-force scan on the fixture") {
  Corpus corpus = load_corpus(test::fixture_path("foreground"));
  auto responses = load_responses_csv(test::fixture_path("responses.csv"));
  auto kept = filter_extractive(filter_length(responses), corpus);

  size_t oracle = 0;
  for (const Response& r : filter_length(responses)) {
    const Document& doc = corpus.at(r.doc_id);
    const auto hay = doc.lower_tokens();
    bool found = false;
    for (size_t i = 0; !found && i + r.tokens.size() <= hay.size(); ++i) {
      found = std::equal(r.tokens.begin(), r.tokens.end(), hay.begin() + i);
    }
    if (found) ++oracle;
  }
  CHECK(kept.size() == oracle);
}

TEST_CASE("filters commute") {
  Corpus corpus = load_corpus(test::fixture_path("foreground"));
  auto responses = load_responses_csv(test::fixture_path("responses.csv"));
  auto blocklist = load_blocklist(test::fixture_path("blocklist.txt"));

  auto key = [](const std::vector<Response>& rs) {
    std::multiset<std::string> keys;
    for (const Response& r : rs) keys.insert(r.doc_id + "|" + r.phrase);
    return keys;
  };
  auto order1 = filter_extractive(
      filter_length(filter_spurious(responses, blocklist, corpus)), corpus);
  auto order2 = filter_spurious(filter_length(filter_extractive(responses, corpus)),
                                blocklist, corpus);
  auto order3 = filter_length(
      filter_extractive(filter_spurious(responses, blocklist, corpus), corpus));
  CHECK(key(order1) == key(order2));
  CHECK(key(order1) == key(order3));
}

TEST_CASE("responses CSV parses quoted phrases") {
  const std::string dir = test::scratch_dir("responses_csv");
  write_text_file(dir + "/r.csv",
                  "doc_id,assignment_id,phrase\n"
                  "d1,a1,\"keywords, titles, and full-text.\"\n"
                  "d1,a1,\"a \"\"quoted\"\" phrase\"\n");
  auto responses = load_responses_csv(dir + "/r.csv");
  REQUIRE(responses.size() == 2);
  CHECK(responses[0].phrase == "keywords, titles, and full-text.");
  CHECK(responses[1].phrase == "a \"quoted\" phrase");
}

TEST_CASE("ngram enumeration matches the combinatorial count") {
  Document doc = make_document("x", "alpha beta gamma");
  auto grams = enumerate_ngrams(doc);
  CHECK(grams.size() == 6);  // 3 + 2 + 1, all distinct

  Document empty = make_document("e", "");
  CHECK(enumerate_ngrams(empty).empty());
}

TEST_CASE("ngrams do not cross sentence boundaries") {
  Document doc = make_document("x", "Alpha beta. Gamma delta.");
  auto grams = enumerate_ngrams(doc);
  std::set<std::string> set(grams.begin(), grams.end());
  CHECK(set.count("alpha beta"));
  CHECK(set.count("gamma delta"));
  CHECK_FALSE(set.count("beta gamma"));
}

TEST_CASE("ngram enumeration equals a double-loop oracle on a fixture abstract") {
  Corpus corpus = load_corpus(test::fixture_path("foreground"));
  const Document& doc = corpus.at("d04");

  std::set<std::string> oracle;
  for (const TokenRange& sent : doc.sentences) {
    for (size_t i = sent.begin; i < sent.end; ++i) {
      for (size_t j = i + 1; j <= sent.end && j - i <= 5; ++j) {
        std::vector<std::string> words;
        for (size_t k = i; k < j; ++k) words.push_back(doc.tokens[k].lower);
        oracle.insert(join_phrase(words));
      }
    }
  }
  auto grams = enumerate_ngrams(doc);
  CHECK(std::set<std::string>(grams.begin(), grams.end()) == oracle);

  // size bound: sum over sentences of per-order window counts
  size_t bound = 0;
  for (const TokenRange& sent : doc.sentences) {
    for (size_t n = 1; n <= 5; ++n) {
      if (sent.size() >= n) bound += sent.size() - n + 1;
    }
  }
  CHECK(grams.size() <= bound);
}

TEST_CASE("collect_positives dedupes (doc, token-sequence) pairs") {
  std::vector<Response> responses = {
      make_response("d1", "Hash Tables"),
      make_response("d1", "hash tables"),   // same pair after folding
      make_response("d2", "hash tables"),   // different document
  };
  auto positives = collect_positives(responses);
  REQUIRE(positives.size() == 2);
  CHECK(positives[0].weight == kPositiveWeight);
  CHECK(positives[0].positive);
}

TEST_CASE("negative sampling draws the exact ratio without touching positives") {
  Corpus corpus = load_corpus(test::fixture_path("foreground"));
  auto responses = load_responses_csv(test::fixture_path("responses.csv"));
  auto blocklist = load_blocklist(test::fixture_path("blocklist.txt"));
  auto survivors = filter_extractive(
      filter_length(filter_spurious(responses, blocklist, corpus)), corpus);
  auto positives = collect_positives(survivors);

  auto negatives = sample_negatives(corpus, positives, 10, 42);
  CHECK(negatives.size() == 10 * positives.size());

  std::set<std::string> positive_keys, negative_keys;
  for (const auto& p : positives) positive_keys.insert(p.doc_id + "|" + join_phrase(p.phrase));
  for (const auto& n : negatives) {
    CHECK(n.weight == kNegativeWeight);
    CHECK_FALSE(n.positive);
    CHECK(n.phrase.size() >= 1);
    CHECK(n.phrase.size() <= 5);
    negative_keys.insert(n.doc_id + "|" + join_phrase(n.phrase));
  }
  CHECK(negative_keys.size() == negatives.size());  // without replacement
  for (const auto& key : negative_keys) CHECK_FALSE(positive_keys.count(key));
}

TEST_CASE("negative sampling is deterministic per seed") {
  Corpus corpus = load_corpus(test::fixture_path("foreground"));
  std::vector<LabeledExample> positives = {{"d01", {"routing", "table"}, true, 1.0}};
  auto a = sample_negatives(corpus, positives, 10, 7);
  auto b = sample_negatives(corpus, positives, 10, 7);
  auto c = sample_negatives(corpus, positives, 10, 8);
  REQUIRE(a.size() == b.size());
  bool identical = true;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].doc_id != b[i].doc_id || a[i].phrase != b[i].phrase) identical = false;
  }
  CHECK(identical);
  bool differs = c.size() != a.size();
  for (size_t i = 0; !differs && i < a.size(); ++i) {
    differs = a[i].doc_id != c[i].doc_id || a[i].phrase != c[i].phrase;
  }
  CHECK(differs);
}

TEST_CASE("exhaustive draw uses every candidate exactly once") {
  Corpus corpus;
  corpus.add(make_document("s1", "alpha beta gamma"));  // 6 distinct n-grams
  std::vector<LabeledExample> positives = {{"s1", {"alpha"}, true, 1.0}};
  auto negatives = sample_negatives(corpus, positives, 5, 3);  // all 5 non-positives
  CHECK(negatives.size() == 5);
  std::set<std::string> seen;
  for (const auto& n : negatives) seen.insert(join_phrase(n.phrase));
  CHECK(seen.size() == 5);
  CHECK_FALSE(seen.count("alpha"));
}

TEST_CASE("insufficient candidates report the shortfall") {
  Corpus corpus;
  corpus.add(make_document("s1", "alpha beta"));  // 3 distinct n-grams
  std::vector<LabeledExample> positives = {{"s1", {"alpha"}, true, 1.0}};
  CHECK_THROWS_WITH_AS(sample_negatives(corpus, positives, 10, 1),
                       doctest::Contains("short by"), std::runtime_error);
}
