#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "kex/featurize.hpp"

namespace kex {

// Everything a pipeline run depends on. One seed drives all randomness; the
// canonical hash of this structure is recorded with every artifact.
struct RunConfig {
  std::string foreground_dir;
  std::string background_dir;
  std::string annotations_dir;
  std::string responses_file;
  std::string blocklist_file;
  std::string index_file;
  std::string output_dir;

  size_t negative_ratio = 10;
  double negative_weight = 0.1;
  size_t max_phrase_words = 5;
  size_t n_max = 5;
  size_t commonness_bins = 0;  // 0 keeps the raw commonness value
  FeatureFamilies families;
  uint64_t seed = 1;
  std::string split_mode = "in-sample";  // or "holdout"
  double holdout_fraction = 0.2;

  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
  std::string hash() const;
  void validate() const;

  FeaturizeOptions featurize_options() const;
};

RunConfig load_run_config(const std::string& path);

// provenance.json written next to the artifacts of a command.
struct Provenance {
  std::string config_hash;
  uint64_t seed = 0;
  nlohmann::json details;                       // funnel counts etc.
  std::map<std::string, std::string> artifacts; // file name -> checksum
};

std::string file_checksum(const std::string& path);

void write_provenance(const std::string& directory, const Provenance& provenance);

// If a provenance.json next to the artifact lists it, the stored checksum
// must match the bytes on disk; otherwise loading is refused.
void verify_artifact(const std::string& artifact_path);

}  // namespace kex
