#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcog/records.hpp"
#include "pcog/roleset.hpp"

namespace pcog::exporter {

/// Written beside every export as "<file>.manifest.json".
struct ExportManifest {
  std::string kind;  // "sft" | "dpo" | "rm"
  std::size_t count = 0;
  std::vector<std::string> source_runs;
  std::string sha256;
  std::map<std::string, std::size_t> breakdown;  // e.g. pos_first / neg_first for rm

  friend bool operator==(const ExportManifest&, const ExportManifest&) = default;
};
void to_json(nlohmann::json& j, const ExportManifest& m);
void from_json(const nlohmann::json& j, ExportManifest& m);

/// Training system message: the Role-Set prompt of the policy.
SftRecord make_sft(const Sample& s, const roleset::RoleSet& rs, const std::string& assistant);
DpoRecord make_dpo(const Sample& s, const roleset::RoleSet& rs, const ChosenRejected& pair);

/// Schema checks shared by writers and reload; `images_root` empty skips the
/// image existence check.
void validate(const SftRecord& r, const std::filesystem::path& images_root = {});
void validate(const DpoRecord& r, const std::filesystem::path& images_root = {});
void validate(const RMExample& r, const std::filesystem::path& images_root = {});

std::vector<SftRecord> build_sft(const std::vector<Sample>& samples, const roleset::Registry& rolesets,
                                 const std::vector<ResponseRecord>& targets);
std::vector<DpoRecord> build_dpo(const std::vector<Sample>& samples, const roleset::Registry& rolesets,
                                 const std::vector<ChosenRejected>& pairs);

ExportManifest export_sft(const std::string& path, const std::vector<SftRecord>& records,
                          const std::filesystem::path& images_root, const std::vector<std::string>& source_runs);
ExportManifest export_dpo(const std::string& path, const std::vector<DpoRecord>& records,
                          const std::filesystem::path& images_root, const std::vector<std::string>& source_runs);
/// Requires an order-balanced corpus (as many pos_first as neg_first).
ExportManifest export_rm_corpus(const std::string& path, const std::vector<RMExample>& records,
                                const std::filesystem::path& images_root,
                                const std::vector<std::string>& source_runs);

/// Reload with validation and checksum against the manifest.
template <class T>
std::vector<T> reload(const std::string& path);

enum class Target { kSft, kDpo, kRm };
const char* to_string(Target t);
Target parse_target(const std::string& s);

/// Low-rank adapter fine-tuning recipe; one recipe serves every target.
struct TrainConfig {
  std::string target;
  double learning_rate = 2e-4;
  int batch_size = 4;
  std::string lr_scheduler = "cosine";
  double warmup_ratio = 0.03;
  int epochs = 4;
  int lora_rank = 8;
  int lora_alpha = 16;
  double lora_dropout = 0.05;
  std::string dataset;

  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};
void to_json(nlohmann::json& j, const TrainConfig& c);
void from_json(const nlohmann::json& j, TrainConfig& c);

TrainConfig train_config(Target t, std::string dataset = {});
void export_train_config(const std::string& path, const TrainConfig& c);

}  // namespace pcog::exporter
