#include "kex/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kex/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace kex {

std::vector<std::string> Document::lower_tokens() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.lower);
  return out;
}

void Corpus::add(Document doc) {
  if (by_id_.count(doc.id)) {
    throw std::runtime_error("duplicate document id: " + doc.id);
  }
  by_id_[doc.id] = docs_.size();
  docs_.push_back(std::move(doc));
}

const Document* Corpus::find(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &docs_[it->second];
}

const Document& Corpus::at(const std::string& id) const {
  const Document* doc = find(id);
  if (!doc) throw std::runtime_error("unknown document id: " + id);
  return *doc;
}

size_t Corpus::total_tokens() const {
  size_t n = 0;
  for (const Document& d : docs_) n += d.tokens.size();
  return n;
}

Document make_document(std::string id, std::string text) {
  Document doc;
  doc.id = std::move(id);
  doc.text = std::move(text);
  size_t nl = doc.text.find('\n');
  if (nl == std::string::npos) {
    doc.title = doc.text;
  } else {
    doc.title = doc.text.substr(0, nl);
    doc.body = doc.text.substr(nl + 1);
  }
  doc.tokens = tokenize(doc.text);
  doc.sentences = segment_sentences(doc.tokens, doc.text);
  return doc;
}

Corpus load_corpus(const std::string& directory) {
  if (!fs::is_directory(directory)) {
    throw std::runtime_error("corpus directory not found: " + directory);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) {
    throw std::runtime_error("no .txt documents in directory: " + directory);
  }
  std::sort(files.begin(), files.end());
  Corpus corpus;
  for (const fs::path& file : files) {
    std::string content;
    try {
      content = read_text_file(file.string());
    } catch (const std::exception& e) {
      throw std::runtime_error("failed to load document " + file.string() + ": " + e.what());
    }
    corpus.add(make_document(file.stem().string(), std::move(content)));
  }
  return corpus;
}

bool is_penn_treebank_tag(const std::string& tag) {
  static const std::set<std::string> tags = {
      "CC",  "CD",  "DT",   "EX",   "FW",  "IN",   "JJ",  "JJR", "JJS",
      "LS",  "MD",  "NN",   "NNS",  "NNP", "NNPS", "PDT", "POS", "PRP",
      "PRP$", "RB", "RBR",  "RBS",  "RP",  "SYM",  "TO",  "UH",  "VB",
      "VBD", "VBG", "VBN",  "VBP",  "VBZ", "WDT",  "WP",  "WP$", "WRB",
      ".",   ",",   ":",    "``",   "''",  "$",    "#",   "-LRB-", "-RRB-",
  };
  return tags.count(tag) > 0;
}

namespace {

struct ChunkBuilder {
  std::vector<TokenRange> ranges;
  size_t open_begin = 0;
  bool open = false;

  void begin(size_t i) {
    close(i);
    open_begin = i;
    open = true;
  }
  void extend() {}
  void close(size_t i) {
    if (open) {
      ranges.push_back({open_begin, i});
      open = false;
    }
  }
};

}  // namespace

AnnotationLayer parse_annotations(const Document& doc, const std::string& content,
                                  const std::string& source_name) {
  AnnotationLayer layer;
  ChunkBuilder np, vp;
  std::istringstream in(content);
  std::string line;
  size_t line_no = 0;
  size_t i = 0;  // token index
  std::string last_chunk = "O";
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) {
      // sentence break, informational only
      continue;
    }
    size_t tab1 = line.find('\t');
    size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos) {
      throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                               ": expected token<TAB>POS<TAB>chunk");
    }
    std::string token = line.substr(0, tab1);
    std::string pos = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string chunk = trim(line.substr(tab2 + 1));

    if (!is_penn_treebank_tag(pos)) {
      throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                               ": unknown POS tag '" + pos + "'");
    }
    if (i < doc.tokens.size() && ascii_lower(token) != doc.tokens[i].lower) {
      throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                               ": token '" + token + "' does not match document token '" +
                               doc.tokens[i].surface + "' at position " + std::to_string(i));
    }

    if (chunk == "B-NP") {
      np.begin(i);
      vp.close(i);
    } else if (chunk == "I-NP") {
      if (last_chunk != "B-NP" && last_chunk != "I-NP") {
        throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                                 ": I-NP without an open NP chunk");
      }
    } else if (chunk == "B-VP") {
      vp.begin(i);
      np.close(i);
    } else if (chunk == "I-VP") {
      if (last_chunk != "B-VP" && last_chunk != "I-VP") {
        throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                                 ": I-VP without an open VP chunk");
      }
    } else if (chunk == "O") {
      np.close(i);
      vp.close(i);
    } else {
      throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                               ": unknown chunk label '" + chunk + "'");
    }
    last_chunk = chunk;
    layer.pos_tags.push_back(pos);
    ++i;
  }
  np.close(i);
  vp.close(i);

  if (layer.pos_tags.size() != doc.tokens.size()) {
    throw std::runtime_error("annotation length mismatch for document '" + doc.id +
                             "': " + std::to_string(layer.pos_tags.size()) +
                             " annotated tokens vs " + std::to_string(doc.tokens.size()) +
                             " document tokens");
  }
  layer.np_chunks = std::move(np.ranges);
  layer.vp_chunks = std::move(vp.ranges);
  return layer;
}

size_t attach_annotations(Corpus& corpus, const std::string& directory) {
  if (!fs::is_directory(directory)) {
    throw std::runtime_error("annotation directory not found: " + directory);
  }
  size_t missing = 0;
  for (Document& doc : corpus.docs()) {
    fs::path file = fs::path(directory) / (doc.id + ".ann");
    if (!fs::exists(file)) {
      ++missing;
      continue;
    }
    doc.annotations = parse_annotations(doc, read_text_file(file.string()), file.string());
  }
  return missing;
}

std::string corpus_manifest_json(const Corpus& corpus) {
  json docs = json::object();
  size_t total_tokens = 0, total_sentences = 0;
  for (const Document& d : corpus.docs()) {
    docs[d.id] = {{"tokens", d.tokens.size()}, {"sentences", d.sentences.size()}};
    total_tokens += d.tokens.size();
    total_sentences += d.sentences.size();
  }
  json manifest = {
      {"documents", docs},
      {"document_count", corpus.size()},
      {"total_tokens", total_tokens},
      {"total_sentences", total_sentences},
  };
  return manifest.dump(2) + "\n";
}

void save_corpus_json(const Corpus& corpus, const std::string& path) {
  json docs = json::array();
  for (const Document& d : corpus.docs()) {
    docs.push_back({{"id", d.id}, {"text", d.text}});
  }
  write_text_file(path, json{{"documents", docs}}.dump());
}

Corpus load_corpus_json(const std::string& path) {
  json root = json::parse(read_text_file(path));
  Corpus corpus;
  for (const json& d : root.at("documents")) {
    corpus.add(make_document(d.at("id").get<std::string>(), d.at("text").get<std::string>()));
  }
  return corpus;
}

}  // namespace kex
