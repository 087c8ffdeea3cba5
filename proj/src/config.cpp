#include "kex/config.hpp"

#include <filesystem>
#include <stdexcept>

#include "kex/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace kex {

json RunConfig::to_json() const {
  return json{
      {"paths",
       {{"foreground", foreground_dir},
        {"background", background_dir},
        {"annotations", annotations_dir},
        {"responses", responses_file},
        {"blocklist", blocklist_file},
        {"index", index_file},
        {"output", output_dir}}},
      {"negative_ratio", negative_ratio},
      {"negative_weight", negative_weight},
      {"max_phrase_words", max_phrase_words},
      {"n_max", n_max},
      {"commonness_bins", commonness_bins},
      {"features",
       {{"frequency", families.frequency},
        {"commonness", families.commonness},
        {"grammar", families.grammar},
        {"positional", families.positional}}},
      {"seed", seed},
      {"split_mode", split_mode},
      {"holdout_fraction", holdout_fraction},
  };
}

RunConfig RunConfig::from_json(const json& j) {
  RunConfig cfg;
  if (j.contains("paths")) {
    const json& p = j["paths"];
    cfg.foreground_dir = p.value("foreground", "");
    cfg.background_dir = p.value("background", "");
    cfg.annotations_dir = p.value("annotations", "");
    cfg.responses_file = p.value("responses", "");
    cfg.blocklist_file = p.value("blocklist", "");
    cfg.index_file = p.value("index", "");
    cfg.output_dir = p.value("output", "");
  }
  cfg.negative_ratio = j.value("negative_ratio", cfg.negative_ratio);
  cfg.negative_weight = j.value("negative_weight", cfg.negative_weight);
  cfg.max_phrase_words = j.value("max_phrase_words", cfg.max_phrase_words);
  cfg.n_max = j.value("n_max", cfg.n_max);
  cfg.commonness_bins = j.value("commonness_bins", cfg.commonness_bins);
  if (j.contains("features")) {
    const json& f = j["features"];
    cfg.families.frequency = f.value("frequency", true);
    cfg.families.commonness = f.value("commonness", true);
    cfg.families.grammar = f.value("grammar", true);
    cfg.families.positional = f.value("positional", true);
  }
  cfg.seed = j.value("seed", cfg.seed);
  cfg.split_mode = j.value("split_mode", cfg.split_mode);
  cfg.holdout_fraction = j.value("holdout_fraction", cfg.holdout_fraction);
  cfg.validate();
  return cfg;
}

void RunConfig::validate() const {
  if (negative_ratio < 1) throw std::runtime_error("negative_ratio must be >= 1");
  if (negative_weight <= 0) throw std::runtime_error("negative_weight must be positive");
  if (max_phrase_words < 1) throw std::runtime_error("max_phrase_words must be >= 1");
  if (n_max < 1 || n_max > 5) throw std::runtime_error("n_max must be in [1, 5]");
  if (commonness_bins != 0 && (commonness_bins < 2 || commonness_bins > 20)) {
    throw std::runtime_error("commonness_bins must be 0 or in [2, 20]");
  }
  if (split_mode != "in-sample" && split_mode != "holdout") {
    throw std::runtime_error("split_mode must be 'in-sample' or 'holdout'");
  }
  if (holdout_fraction <= 0.0 || holdout_fraction >= 1.0) {
    throw std::runtime_error("holdout_fraction must be in (0, 1)");
  }
}

std::string RunConfig::hash() const { return to_hex(fnv1a64(to_json().dump())); }

FeaturizeOptions RunConfig::featurize_options() const {
  FeaturizeOptions options;
  options.max_phrase_words = max_phrase_words;
  options.negative_ratio = negative_ratio;
  options.negative_weight = negative_weight;
  options.n_max = n_max;
  options.seed = seed;
  options.families = families;
  return options;
}

RunConfig load_run_config(const std::string& path) {
  return RunConfig::from_json(json::parse(read_text_file(path)));
}

std::string file_checksum(const std::string& path) {
  return to_hex(fnv1a64(read_text_file(path)));
}

void write_provenance(const std::string& directory, const Provenance& provenance) {
  json root = {
      {"config_hash", provenance.config_hash},
      {"seed", provenance.seed},
      {"artifacts", provenance.artifacts},
  };
  if (!provenance.details.is_null()) root["details"] = provenance.details;
  write_text_file((fs::path(directory) / "provenance.json").string(), root.dump(2) + "\n");
}

void verify_artifact(const std::string& artifact_path) {
  const fs::path artifact(artifact_path);
  const fs::path prov_path = artifact.parent_path() / "provenance.json";
  if (!fs::exists(prov_path)) return;
  json root = json::parse(read_text_file(prov_path.string()));
  if (!root.contains("artifacts")) return;
  const json& artifacts = root["artifacts"];
  const std::string name = artifact.filename().string();
  if (!artifacts.contains(name)) return;
  const std::string expected = artifacts[name].get<std::string>();
  const std::string actual = file_checksum(artifact_path);
  if (expected != actual) {
    throw std::runtime_error("artifact checksum mismatch for " + artifact_path +
                             " (provenance records " + expected + ", file has " + actual +
                             "); the file was modified after it was produced");
  }
}

}  // namespace kex
