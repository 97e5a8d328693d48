#pragma once

// Wire-stable record schemas. Every type here round-trips through one JSON
// object per line; field names are the on-disk contract.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pcog {

enum class Split { kTrain, kTest };
const char* to_string(Split s);
Split parse_split(const std::string& s);

struct Sample {
  std::string id;
  std::string subset;
  std::string roleset_id;
  std::string location;
  std::string image_ref;  // relative to the images root
  std::string scene_text;
  std::string query;
  Split split = Split::kTrain;
  std::optional<std::string> oracle_guidance;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct SituatedCognition {
  std::string visual_scene;
  std::string psychological_state;
  std::string next_step;

  friend bool operator==(const SituatedCognition&, const SituatedCognition&) = default;
};

struct BestAction {
  std::string body_behavior;
  std::string mind_feelings;

  friend bool operator==(const BestAction&, const BestAction&) = default;
};

struct KeyPoints {
  std::vector<std::string> body_points;
  std::vector<std::string> mind_points;

  friend bool operator==(const KeyPoints&, const KeyPoints&) = default;
};

/// Per-sample estimates persisted between `pipeline estimate` and later stages.
struct EstimateRecord {
  std::string sample_id;
  SituatedCognition cognition;
  BestAction action;

  friend bool operator==(const EstimateRecord&, const EstimateRecord&) = default;
};

/// One A/B evaluation inside a tournament round.
struct OrderedJudgement {
  std::string order;   // "incumbent_first" | "challenger_first"
  std::string choice;  // "A" | "B" | "undecided"

  friend bool operator==(const OrderedJudgement&, const OrderedJudgement&) = default;
};

struct TournamentDecision {
  int round = 0;
  int incumbent = 0;
  int challenger = 0;
  std::vector<OrderedJudgement> judgements;
  std::string outcome;  // "replace" | "keep" | "undecided"

  friend bool operator==(const TournamentDecision&, const TournamentDecision&) = default;
};

struct CandidateSet {
  std::string sample_id;
  std::vector<std::string> responses;
  std::vector<std::string> provenance;  // "initial", "keyg_resg_iter_1", ...
  std::optional<int> selected_index;
  std::string order_policy;
  int initial_incumbent = 0;
  std::vector<TournamentDecision> trace;

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
};

struct PreferencePair {
  std::string sample_id;
  std::string pos_roleset_id;
  std::string neg_roleset_id;
  std::string response_pos;
  std::string response_neg;
  std::string action_pos;
  std::string action_neg;
  SituatedCognition cognition;

  friend bool operator==(const PreferencePair&, const PreferencePair&) = default;
};

enum class PairOrder { kPosFirst, kNegFirst };
const char* to_string(PairOrder o);
PairOrder parse_pair_order(const std::string& s);

struct RMExample {
  std::string sample_id;
  std::string image_ref;
  std::string input_text;
  std::string target_text;
  PairOrder order = PairOrder::kPosFirst;

  friend bool operator==(const RMExample&, const RMExample&) = default;
};

struct JudgeVerdict {
  char choice = 'A';  // 'A' | 'B'
  std::string action_a;
  std::string action_b;
  std::string raw;

  friend bool operator==(const JudgeVerdict&, const JudgeVerdict&) = default;
};

struct DimScores {
  int rsa = 1;
  int bba = 1;
  int mfa = 1;
  int ca = 1;
  int cf = 1;

  std::array<int, 5> as_array() const { return {rsa, bba, mfa, ca, cf}; }
  friend bool operator==(const DimScores&, const DimScores&) = default;
};

struct EvalRecord {
  std::string sample_id;
  std::string method;
  DimScores scores;
  double p_score = 0.0;
  std::string explanation;

  friend bool operator==(const EvalRecord&, const EvalRecord&) = default;
};

/// A method's response for one sample (baseline and pipeline outputs).
struct ResponseRecord {
  std::string sample_id;
  std::string method;
  std::string response;
  std::string provenance;

  friend bool operator==(const ResponseRecord&, const ResponseRecord&) = default;
};

/// Chosen/rejected pair produced by a baseline or a selection variant.
struct ChosenRejected {
  std::string sample_id;
  std::string method;
  std::string chosen;
  std::string rejected;

  friend bool operator==(const ChosenRejected&, const ChosenRejected&) = default;
};

struct UserParts {
  std::string image_ref;
  std::string query;

  friend bool operator==(const UserParts&, const UserParts&) = default;
};

struct SftRecord {
  std::string sample_id;
  std::string system;
  UserParts user;
  std::string assistant;

  friend bool operator==(const SftRecord&, const SftRecord&) = default;
};

struct DpoRecord {
  std::string sample_id;
  std::string system;
  UserParts user;
  std::string chosen;
  std::string rejected;

  friend bool operator==(const DpoRecord&, const DpoRecord&) = default;
};

/// A sample that failed a stage after its retry budget; kept, not dropped.
struct QuarantineRecord {
  std::string sample_id;
  std::string stage;
  std::string error;
  std::string raw;

  friend bool operator==(const QuarantineRecord&, const QuarantineRecord&) = default;
};

void to_json(nlohmann::json& j, const Sample& v);
void from_json(const nlohmann::json& j, Sample& v);
void to_json(nlohmann::json& j, const SituatedCognition& v);
void from_json(const nlohmann::json& j, SituatedCognition& v);
void to_json(nlohmann::json& j, const BestAction& v);
void from_json(const nlohmann::json& j, BestAction& v);
void to_json(nlohmann::json& j, const KeyPoints& v);
void from_json(const nlohmann::json& j, KeyPoints& v);
void to_json(nlohmann::json& j, const EstimateRecord& v);
void from_json(const nlohmann::json& j, EstimateRecord& v);
void to_json(nlohmann::json& j, const OrderedJudgement& v);
void from_json(const nlohmann::json& j, OrderedJudgement& v);
void to_json(nlohmann::json& j, const TournamentDecision& v);
void from_json(const nlohmann::json& j, TournamentDecision& v);
void to_json(nlohmann::json& j, const CandidateSet& v);
void from_json(const nlohmann::json& j, CandidateSet& v);
void to_json(nlohmann::json& j, const PreferencePair& v);
void from_json(const nlohmann::json& j, PreferencePair& v);
void to_json(nlohmann::json& j, const RMExample& v);
void from_json(const nlohmann::json& j, RMExample& v);
void to_json(nlohmann::json& j, const JudgeVerdict& v);
void from_json(const nlohmann::json& j, JudgeVerdict& v);
void to_json(nlohmann::json& j, const DimScores& v);
void from_json(const nlohmann::json& j, DimScores& v);
void to_json(nlohmann::json& j, const EvalRecord& v);
void from_json(const nlohmann::json& j, EvalRecord& v);
void to_json(nlohmann::json& j, const ResponseRecord& v);
void from_json(const nlohmann::json& j, ResponseRecord& v);
void to_json(nlohmann::json& j, const ChosenRejected& v);
void from_json(const nlohmann::json& j, ChosenRejected& v);
void to_json(nlohmann::json& j, const UserParts& v);
void from_json(const nlohmann::json& j, UserParts& v);
void to_json(nlohmann::json& j, const SftRecord& v);
void from_json(const nlohmann::json& j, SftRecord& v);
void to_json(nlohmann::json& j, const DpoRecord& v);
void from_json(const nlohmann::json& j, DpoRecord& v);
void to_json(nlohmann::json& j, const QuarantineRecord& v);
void from_json(const nlohmann::json& j, QuarantineRecord& v);

/// Uniqueness key used for duplicate detection on load; empty = no key.
std::string record_key(const Sample& v);
std::string record_key(const EstimateRecord& v);
std::string record_key(const CandidateSet& v);
std::string record_key(const EvalRecord& v);
std::string record_key(const ResponseRecord& v);
template <class T>
std::string record_key(const T&) {
  return {};
}

}  // namespace pcog
