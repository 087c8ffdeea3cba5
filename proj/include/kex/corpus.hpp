#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kex/text.hpp"

namespace kex {

// POS tags per token plus NP/VP chunk spans, read from a .ann file.
// Chunks within a layer never overlap (they come from a BIO column).
struct AnnotationLayer {
  std::vector<std::string> pos_tags;
  std::vector<TokenRange> np_chunks;
  std::vector<TokenRange> vp_chunks;
};

struct Document {
  std::string id;
  std::string title;  // first line of the source file
  std::string body;   // remainder
  std::string text;   // full source text; token spans index into this
  std::vector<Token> tokens;
  std::vector<TokenRange> sentences;
  std::optional<AnnotationLayer> annotations;

  // Lowercased token sequence, cached for phrase matching.
  std::vector<std::string> lower_tokens() const;
};

class Corpus {
 public:
  void add(Document doc);

  const std::vector<Document>& docs() const { return docs_; }
  std::vector<Document>& docs() { return docs_; }
  size_t size() const { return docs_.size(); }

  const Document* find(const std::string& id) const;
  const Document& at(const std::string& id) const;  // throws on unknown id

  size_t total_tokens() const;

 private:
  std::vector<Document> docs_;
  std::unordered_map<std::string, size_t> by_id_;
};

// Builds a Document from raw text: first line is the title, the rest is the
// body; tokens and sentences cover the whole text, title first.
Document make_document(std::string id, std::string text);

// Loads every <id>.txt in the directory, in sorted id order.
Corpus load_corpus(const std::string& directory);

// Parses a .ann file (token<TAB>POS<TAB>chunk per line, blank line between
// sentences) and validates it against the document.
AnnotationLayer parse_annotations(const Document& doc, const std::string& content,
                                  const std::string& source_name);

// Attaches <id>.ann layers from the directory to matching documents.
// Returns the number of documents that had no annotation file.
size_t attach_annotations(Corpus& corpus, const std::string& directory);

bool is_penn_treebank_tag(const std::string& tag);

// Per-document token and sentence counts, as JSON text.
std::string corpus_manifest_json(const Corpus& corpus);

// Full corpus serialization; reloading reproduces tokens and sentence
// boundaries exactly.
void save_corpus_json(const Corpus& corpus, const std::string& path);
Corpus load_corpus_json(const std::string& path);

}  // namespace kex
