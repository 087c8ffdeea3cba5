#include "kex/ngram_index.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "kex/util.hpp"

using nlohmann::json;

namespace kex {

namespace {
constexpr int kIndexFormatVersion = 1;

size_t ngram_order(const std::string& term) {
  size_t order = 1;
  for (char c : term) {
    if (c == ' ') ++order;
  }
  return order;
}
}  // namespace

NgramIndex NgramIndex::build(const Corpus& background, size_t n_max) {
  if (background.size() == 0) {
    throw std::runtime_error("cannot build n-gram index from an empty corpus");
  }
  NgramIndex index;
  index.maps_.resize(n_max);
  index.tf_max_.assign(n_max, 0);
  index.document_count_ = background.size();
  for (const Document& doc : background.docs()) {
    index.total_tokens_ += doc.tokens.size();
    std::unordered_set<std::string> seen_in_doc;
    for (const TokenRange& sent : doc.sentences) {
      for (size_t i = sent.begin; i < sent.end; ++i) {
        std::string gram;
        for (size_t n = 1; n <= n_max && i + n <= sent.end; ++n) {
          if (n > 1) gram += ' ';
          gram += doc.tokens[i + n - 1].lower;
          Entry& e = index.maps_[n - 1][gram];
          e.tf += 1;
          if (seen_in_doc.insert(gram).second) e.df += 1;
        }
      }
    }
  }
  for (size_t n = 0; n < n_max; ++n) {
    for (const auto& [term, entry] : index.maps_[n]) {
      if (entry.tf > index.tf_max_[n]) index.tf_max_[n] = entry.tf;
    }
  }
  return index;
}

double NgramIndex::avg_doc_tokens() const {
  return document_count_ == 0 ? 0.0
                              : static_cast<double>(total_tokens_) /
                                    static_cast<double>(document_count_);
}

NgramIndex::Entry NgramIndex::lookup(const std::string& term) const {
  size_t order = ngram_order(term);
  if (order == 0 || order > maps_.size()) return {};
  const auto& map = maps_[order - 1];
  auto it = map.find(term);
  return it == map.end() ? Entry{} : it->second;
}

uint64_t NgramIndex::tf_max(size_t order) const {
  if (order == 0 || order > tf_max_.size()) return 0;
  return tf_max_[order - 1];
}

uint64_t NgramIndex::vocabulary_size(size_t order) const {
  if (order == 0 || order > maps_.size()) return 0;
  return maps_[order - 1].size();
}

void NgramIndex::save(const std::string& path) const {
  json orders = json::object();
  for (size_t n = 1; n <= maps_.size(); ++n) {
    // std::map gives sorted keys, so the payload bytes are reproducible.
    std::map<std::string, json> sorted;
    for (const auto& [term, entry] : maps_[n - 1]) {
      sorted[term] = json::array({entry.tf, entry.df});
    }
    orders[std::to_string(n)] = sorted;
  }
  json payload = {
      {"orders", orders},
      {"document_count", document_count_},
      {"total_tokens", total_tokens_},
      {"n_max", maps_.size()},
  };
  const std::string payload_text = payload.dump();
  json root = {
      {"format_version", kIndexFormatVersion},
      {"checksum", to_hex(fnv1a64(payload_text))},
      {"payload", payload},
  };
  write_text_file(path, root.dump());
}

NgramIndex NgramIndex::load(const std::string& path) {
  json root;
  try {
    root = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error("corrupt index file " + path + ": " + e.what());
  }
  if (!root.contains("format_version") ||
      root["format_version"].get<int>() != kIndexFormatVersion) {
    throw std::runtime_error("unsupported index format version in " + path);
  }
  const std::string payload_text = root.at("payload").dump();
  if (root.at("checksum").get<std::string>() != to_hex(fnv1a64(payload_text))) {
    throw std::runtime_error("index checksum mismatch, file is corrupt: " + path);
  }
  const json& payload = root["payload"];
  NgramIndex index;
  size_t n_max = payload.at("n_max").get<size_t>();
  index.maps_.resize(n_max);
  index.tf_max_.assign(n_max, 0);
  index.document_count_ = payload.at("document_count").get<uint64_t>();
  index.total_tokens_ = payload.at("total_tokens").get<uint64_t>();
  for (const auto& [order_str, terms] : payload.at("orders").items()) {
    size_t n = std::stoul(order_str);
    if (n == 0 || n > n_max) throw std::runtime_error("bad n-gram order in " + path);
    for (const auto& [term, counts] : terms.items()) {
      Entry e{counts.at(0).get<uint64_t>(), counts.at(1).get<uint64_t>()};
      index.maps_[n - 1][term] = e;
      if (e.tf > index.tf_max_[n - 1]) index.tf_max_[n - 1] = e.tf;
    }
  }
  return index;
}

double commonness(const std::string& term, const NgramIndex& index) {
  NgramIndex::Entry entry = index.lookup(term);
  if (entry.tf == 0) return 0.0;
  uint64_t max_tf = index.tf_max(ngram_order(term));
  if (max_tf <= 1 || entry.tf == max_tf) return 1.0;
  return std::log(static_cast<double>(entry.tf)) / std::log(static_cast<double>(max_tf));
}

size_t commonness_bin(double value, size_t num_bins) {
  if (num_bins < 2 || num_bins > 20) {
    throw std::invalid_argument("commonness bins must be in [2, 20]");
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("commonness value outside [0, 1]: " +
                                format_double(value));
  }
  size_t bin = static_cast<size_t>(value * static_cast<double>(num_bins));
  if (bin >= num_bins) bin = num_bins - 1;  // value 1.0 goes to the last bin
  return bin;
}

std::vector<double> bin_commonness(double value, size_t num_bins) {
  std::vector<double> one_hot(num_bins, 0.0);
  one_hot[commonness_bin(value, num_bins)] = 1.0;
  return one_hot;
}

}  // namespace kex
