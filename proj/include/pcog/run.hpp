#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcog/bench.hpp"
#include "pcog/gateway.hpp"

namespace pcog::run {

inline constexpr const char* kVersion = "0.1.0";

/// Whole run state in one file. Relative paths resolve against the config
/// file's directory. Secrets only via the endpoints' api_key_env.
struct RunConfig {
  std::uint64_t seed = 0;
  gateway::EndpointConfig assistant;
  gateway::EndpointConfig reward;
  gateway::EndpointConfig judge;

  std::string run_dir = "run";
  std::string images_root = "images";
  std::string catalog;         // empty: builtin catalog
  std::string expectations;    // empty: placeholder expectations
  std::string samples;         // empty: <run_dir>/bench/samples.jsonl
  std::string image_manifest;  // JSON object description -> image_ref; optional

  std::vector<std::string> subsets = {"LS1", "LS2"};
  std::string cohort_policy = "paper";
  std::size_t cohort_size = 10;

  int n_candidates = 6;
  std::string keypoint_mode = "chained";
  std::string order_policy = "both_orders_conservative";
  double test_fraction = 1.0 / 3.0;
  bench::ScenePlan scene_plan;
  int self_refine_iterations = 3;
  std::size_t rag_k = 3;

  int max_parallel = 4;
  double max_quarantine_fraction = 0.1;  // per command; breach -> kQuarantine

  std::string annotation_host = "127.0.0.1";
  int annotation_port = 8080;
  int annotation_quota = 1;
  std::string ui_root;

  bool dry_run = false;

  /// kConfig "field.path: reason". `check_paths` also requires referenced
  /// inputs (images root, catalog, expectations) to exist.
  void validate(bool check_paths = true) const;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);
/// Parses and resolves relative paths against `base_dir`.
RunConfig parse_config(const nlohmann::json& j, const std::string& base_dir);
RunConfig load_config(const std::string& path);

/// Executes named commands ("bench.scenes", "pipeline.sample", ...) against
/// one configured run. Each command writes its artifacts and a manifest
/// under run_dir and returns a JSON summary.
class Runner {
 public:
  explicit Runner(RunConfig cfg);
  ~Runner();
  Runner(const Runner&) = delete;
  Runner& operator=(const Runner&) = delete;

  nlohmann::json execute(const std::string& command, const nlohmann::json& options = nlohmann::json::object());

  const RunConfig& config() const;
  /// Effective run directory (dry runs write to <run_dir>/dry_run).
  std::string run_dir() const;
  static const std::vector<std::string>& commands();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pcog::run
