#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace kex {

// 64-bit FNV-1a. Used for config hashes and artifact checksums.
inline uint64_t fnv1a64(std::string_view data) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_hex(uint64_t value);

// Deterministic RNG. std::uniform_int_distribution and std::shuffle are
// implementation-defined, so bounded draws and shuffling are done by hand
// on top of the standardized mt19937_64 stream.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform draw from [0, n). Rejection sampling, unbiased.
  uint64_t next_below(uint64_t n);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    if (items.size() < 2) return;
    for (size_t i = items.size() - 1; i > 0; --i) {
      size_t j = static_cast<size_t>(next_below(i + 1));
      std::swap(items[i], items[j]);
    }
  }

  double next_unit();  // uniform in [0, 1)

 private:
  std::mt19937_64 engine_;
};

// Shortest round-trip decimal form of a double; stable across reruns.
std::string format_double(double value);

std::string trim(std::string_view s);
std::string ascii_lower(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::vector<std::string> split_ws(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace kex
