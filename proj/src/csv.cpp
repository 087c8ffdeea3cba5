#include "kex/csv.hpp"

#include <stdexcept>

#include "kex/util.hpp"

namespace kex {

CsvReader::CsvReader(const std::string& path) : content_(read_text_file(path)) {}

bool CsvReader::next_row(std::vector<std::string>& row) {
  row.clear();
  // skip blank and comment lines
  while (pos_ < content_.size()) {
    if (content_[pos_] == '\n') {
      ++pos_;
      ++line_;
    } else if (content_[pos_] == '\r' && pos_ + 1 < content_.size() &&
               content_[pos_ + 1] == '\n') {
      pos_ += 2;
      ++line_;
    } else if (content_[pos_] == '#') {
      while (pos_ < content_.size() && content_[pos_] != '\n') ++pos_;
    } else {
      break;
    }
  }
  if (pos_ >= content_.size()) return false;

  ++line_;
  std::string field;
  bool in_quotes = false;
  while (pos_ < content_.size()) {
    char c = content_[pos_];
    if (in_quotes) {
      if (c == '"') {
        if (pos_ + 1 < content_.size() && content_[pos_ + 1] == '"') {
          field += '"';
          pos_ += 2;
        } else {
          in_quotes = false;
          ++pos_;
        }
      } else {
        if (c == '\n') ++line_;
        field += c;
        ++pos_;
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      in_quotes = true;
      ++pos_;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      ++pos_;
    } else if (c == '\n' || (c == '\r' && pos_ + 1 < content_.size() &&
                             content_[pos_ + 1] == '\n')) {
      pos_ += (c == '\r') ? 2 : 1;
      row.push_back(std::move(field));
      return true;
    } else {
      field += c;
      ++pos_;
    }
  }
  if (in_quotes) throw std::runtime_error("unterminated quoted CSV field");
  row.push_back(std::move(field));
  return true;
}

std::string csv_escape(const std::string& field) {
  bool needs_quotes = false;
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(fields[i]);
  }
  out += '\n';
  return out;
}

}  // namespace kex
