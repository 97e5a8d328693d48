#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcog/gateway.hpp"
#include "pcog/prompting.hpp"
#include "pcog/records.hpp"
#include "pcog/roleset.hpp"

namespace pcog::cognition {

/// Bullet labels of the cognition analysis, matched case-insensitively.
inline constexpr const char* kVisualSceneLabel = "Cognition of Current Visual Scene";
inline constexpr const char* kPsychStateLabel = "Cognition of Current Psychological State";
inline constexpr const char* kNextStepLabel = "Cognition of Next-Step Action";
inline constexpr const char* kBodyLabel = "Body Behavior";
inline constexpr const char* kMindLabel = "Mind Feelings";
inline constexpr const char* kBodyHeading = "For Better Body Behavior State";
inline constexpr const char* kMindHeading = "For Better Mind Feelings State";

/// Bullets are matched by label, in any order. Throws ParseError when one is
/// missing or empty.
SituatedCognition parse_cognition(const std::string& raw);
BestAction parse_best_action(const std::string& raw);
KeyPoints parse_keypoints(const std::string& raw);

std::string format_cognition(const SituatedCognition& c);
std::string format_best_action(const BestAction& a);
std::string format_keypoints(const KeyPoints& k);

/// Sample inputs plus the owning Role-Set, as every sample-level prompt needs both.
struct SampleView {
  const Sample& sample;
  const roleset::RoleSet& rs;
};

std::string render_cognition(const SampleView& s);
std::string render_best_action(const SampleView& s, const SituatedCognition& c);
std::string render_keyg(const SampleView& s, const SituatedCognition& c, const BestAction& a);
std::string render_resg(const SampleView& s, const std::string& reference_response, const KeyPoints& k);

SituatedCognition estimate_cognition(const gateway::Client& client, const SampleView& s);
BestAction estimate_best_action(const gateway::Client& client, const SampleView& s, const SituatedCognition& c);
EstimateRecord estimate(const gateway::Client& client, const SampleView& s);

KeyPoints gen_keypoints(const gateway::Client& client, const SampleView& s, const SituatedCognition& c,
                        const BestAction& a, std::optional<double> temperature = std::nullopt);
/// ResG under the Role-Set system message.
std::string gen_response(const gateway::Client& client, const SampleView& s, const std::string& reference_response,
                         const KeyPoints& k, std::optional<double> temperature = std::nullopt);

enum class KeyPointMode { kChained, kStatic };
const char* to_string(KeyPointMode m);
KeyPointMode parse_keypoint_mode(const std::string& s);

struct SamplerConfig {
  int n_candidates = 6;
  KeyPointMode keypoints = KeyPointMode::kChained;
  std::optional<double> temperature;  // KeyG/ResG; endpoint default when unset
};

/// response[0] from the Role-Set prompt, then n-1 KeyG -> ResG rounds where
/// round k refines response[k-1]. Chained mode re-runs KeyG every round;
/// static mode reuses the first round's key points.
///
/// On failure throws SamplingError carrying the partial set.
CandidateSet sample_candidates(const gateway::Client& client, const SampleView& s, const EstimateRecord& est,
                               const SamplerConfig& cfg);

class SamplingError : public Error {
 public:
  SamplingError(const Error& cause, CandidateSet partial)
      : Error(cause.code(), cause.what()), partial_(std::move(partial)) {
    if (const auto* pe = dynamic_cast<const ParseError*>(&cause)) raw_ = pe->raw();
  }
  const CandidateSet& partial() const { return partial_; }
  const std::string& raw() const { return raw_; }

 private:
  CandidateSet partial_;
  std::string raw_;
};

/// Bounded-parallel estimates over samples; failures are quarantined.
StageResult<EstimateRecord> run_estimates(const gateway::Client& client, const std::vector<Sample>& samples,
                                          const roleset::Registry& rolesets, int max_parallel);
StageResult<CandidateSet> run_sampling(const gateway::Client& client, const std::vector<Sample>& samples,
                                       const std::vector<EstimateRecord>& estimates,
                                       const roleset::Registry& rolesets, const SamplerConfig& cfg,
                                       int max_parallel);

}  // namespace pcog::cognition
