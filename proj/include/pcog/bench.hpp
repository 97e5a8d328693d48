#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcog/gateway.hpp"
#include "pcog/prompting.hpp"
#include "pcog/records.hpp"
#include "pcog/roleset.hpp"

namespace pcog::bench {

enum class SceneMode { kDaily, kEmergent };
const char* to_string(SceneMode m);
SceneMode parse_scene_mode(const std::string& s);

/// One scene through the four levels, later extended by the query stage.
struct BenchRecord {
  std::string id;
  std::string roleset_id;
  std::string subset;
  std::string location;
  SceneMode scene_mode = SceneMode::kDaily;
  std::string scene_type;
  std::string phrase;
  std::string description;
  std::optional<std::string> image_ref;
  std::string scene_text;
  std::vector<std::string> candidate_queries;
  std::string query;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

void to_json(nlohmann::json& j, const BenchRecord& r);
void from_json(const nlohmann::json& j, BenchRecord& r);
std::string record_key(const BenchRecord& r);

/// Sentence filling the daily_or_emergent_desc slot.
std::string mode_sentence(SceneMode m);

/// List completions: the first bracketed quoted list after `anchor` (or
/// anywhere when the anchor is absent). Throws ParseError.
std::vector<std::string> parse_list_response(const std::string& raw, std::string_view anchor = {});
/// Case-insensitive dedup keeping first spellings, empties removed.
std::vector<std::string> dedup_icase(const std::vector<std::string>& items);
/// "<Generated Visual Scene>..." body (or the whole text), one quote layer stripped.
std::string parse_description(const std::string& raw);
/// Selected query; must be one of `candidates` (kIntegrity otherwise).
std::string parse_selected_query(const std::string& raw, const std::vector<std::string>& candidates);

/// Fraction of the phrase's word tokens present in the description.
double token_overlap(std::string_view description, std::string_view phrase);
bool relevant(std::string_view description, std::string_view phrase, double threshold);

std::string render_scene_types(const roleset::RoleSet& rs, std::string_view location, SceneMode mode,
                               const roleset::RoleCatalog& catalog);

std::vector<std::string> gen_scene_types(const gateway::Client& client, const roleset::RoleSet& rs,
                                         std::string_view location, SceneMode mode,
                                         const roleset::RoleCatalog& catalog);
std::vector<std::string> gen_phrases(const gateway::Client& client, const std::string& scene_type,
                                     std::string_view location, int n = 5);
std::string gen_description(const gateway::Client& client, const std::string& phrase,
                            const std::string& scene_type, std::string_view location);
/// Vision call on `images_root/image_ref`; kNotFound when the file is missing.
std::string describe_image(const gateway::Client& client, const std::string& image_ref,
                           std::string_view location, const std::string& images_root);
std::vector<std::string> gen_queries(const gateway::Client& client, const roleset::RoleSet& rs,
                                     std::string_view location, const std::string& scene_text,
                                     const std::optional<std::string>& image_ref,
                                     const roleset::RoleCatalog& catalog);
std::string select_best_query(const gateway::Client& client, const roleset::RoleSet& rs,
                              std::string_view location, const std::string& scene_text,
                              const std::vector<std::string>& candidates,
                              const std::optional<std::string>& image_ref,
                              const roleset::RoleCatalog& catalog);

struct ScenePlan {
  std::vector<SceneMode> modes = {SceneMode::kDaily, SceneMode::kEmergent};
  std::size_t max_types = 5;   // per (Role-Set, location, mode)
  int phrases_per_type = 5;
  std::size_t max_phrases = 5;  // kept per type
  double relevance_threshold = 0.5;
  int max_parallel = 4;
};

/// Levels 1-3 for every (Role-Set, subset location, mode); records that fail
/// the relevance filter are reported in `quarantined` with stage "relevance".
StageResult<BenchRecord> run_scenes(const gateway::Client& client, const std::vector<roleset::RoleSet>& cohort,
                                    const ScenePlan& plan, const roleset::RoleCatalog& catalog);

/// Unique level-3 descriptions, in record order: the search-term list for
/// external image harvesting.
std::vector<std::string> search_terms(const std::vector<BenchRecord>& records);

/// Image for a record: its own image_ref, else the manifest entry for its description.
std::optional<std::string> resolve_image(const BenchRecord& r, const std::map<std::string, std::string>& manifest);

/// Describe, generate candidates and select one query per record. Records
/// without a resolvable image are skipped and reported.
StageResult<BenchRecord> run_queries(const gateway::Client& client, const std::vector<BenchRecord>& records,
                                     const roleset::Registry& rolesets,
                                     const std::map<std::string, std::string>& image_manifest,
                                     const std::string& images_root, const roleset::RoleCatalog& catalog,
                                     int max_parallel = 4);

struct SplitPolicy {
  double test_fraction = 1.0 / 3.0;
  std::uint64_t seed = 0;
};

struct AssembleResult {
  std::vector<Sample> samples;
  std::vector<std::pair<std::string, std::string>> dropped;  // record id, reason
};

/// Seeded stratified split: within each Role-Set, round(test_fraction * n)
/// records go to test, chosen by a seeded shuffle. Output keeps record order.
std::vector<Split> stratified_split(const std::vector<std::string>& group_keys, const SplitPolicy& policy);

AssembleResult assemble_samples(const std::vector<BenchRecord>& records,
                                const std::map<std::string, std::string>& image_manifest,
                                const SplitPolicy& policy);

}  // namespace pcog::bench
