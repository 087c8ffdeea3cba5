#pragma once

#include <string>
#include <vector>

namespace kex {

// Minimal CSV support: comma separator, double-quote quoting with "" escapes,
// quoted fields may contain commas and newlines. Lines starting with '#'
// outside any record are treated as comments.
class CsvReader {
 public:
  explicit CsvReader(const std::string& path);

  // Returns false at end of input. `row` receives the parsed fields.
  bool next_row(std::vector<std::string>& row);

  size_t line() const { return line_; }

 private:
  std::string content_;
  size_t pos_ = 0;
  size_t line_ = 0;
};

std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace kex
