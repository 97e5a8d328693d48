#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcog/cognition.hpp"
#include "pcog/gateway.hpp"
#include "pcog/prompting.hpp"
#include "pcog/records.hpp"
#include "pcog/roleset.hpp"

namespace pcog::reward {

/// Negative Role-Set for `rs` at `location`: the first cohort member whose
/// role there differs, or nullopt.
std::optional<roleset::RoleSet> pick_negative(const roleset::RoleSet& rs, std::string_view location,
                                              const std::vector<roleset::RoleSet>& cohort);

std::string render_response_action(const cognition::SampleView& s, const SituatedCognition& c,
                                   const std::string& response);
/// The user's two-line reaction (body behavior, mind feelings) to `response`.
std::string gen_action(const gateway::Client& client, const cognition::SampleView& s, const SituatedCognition& c,
                       const std::string& response);

PreferencePair build_preference_pair(const gateway::Client& client, const cognition::SampleView& s,
                                     const roleset::RoleSet& negative, const SituatedCognition& c);

/// One pair per sample; samples without a negative Role-Set (or estimate)
/// land in `quarantined` with stage "preference_pairs".
StageResult<PreferencePair> build_preference_pairs(const gateway::Client& client, const std::vector<Sample>& samples,
                                                   const std::vector<EstimateRecord>& estimates,
                                                   const roleset::Registry& rolesets,
                                                   const std::vector<roleset::RoleSet>& cohort, int max_parallel);

/// RM input/target for one order. The judged-better label always points at
/// the positive-Role-Set response.
RMExample render_rm_example(const PreferencePair& pair, const cognition::SampleView& s, PairOrder order);
/// Both orders, pos_first then neg_first.
std::vector<RMExample> render_rm_duals(const PreferencePair& pair, const cognition::SampleView& s);

std::string render_rm_input(const cognition::SampleView& s, const SituatedCognition& c, const std::string& resp_a,
                            const std::string& resp_b);

/// Reads the final judgement sentence; throws ParseError when it names
/// neither or both responses.
JudgeVerdict parse_verdict(const std::string& raw);

JudgeVerdict judge_pair(const gateway::Client& rm, const cognition::SampleView& s, const SituatedCognition& c,
                        const std::string& resp_a, const std::string& resp_b);

enum class OrderPolicy { kBothOrdersConservative, kSingleOrder };
const char* to_string(OrderPolicy p);
OrderPolicy parse_order_policy(const std::string& s);

/// One incumbent-vs-challenger comparison. Outcomes: "replace" (challenger
/// preferred under every evaluated order), "keep", or "undecided" (a judge
/// error on any order).
TournamentDecision compare(const gateway::Client& rm, const cognition::SampleView& s, const SituatedCognition& c,
                           const CandidateSet& cs, int incumbent, int challenger, OrderPolicy policy, int round);

/// Sequential tournament from response[0]; fills selected_index, trace,
/// order_policy and initial_incumbent.
CandidateSet best_of_n(const gateway::Client& rm, const cognition::SampleView& s, const SituatedCognition& c,
                       CandidateSet cs, OrderPolicy policy);

enum class Variant { kFull, kDVariant, kSVariant };
const char* to_string(Variant v);
Variant parse_variant(const std::string& s);

struct VariantResult {
  std::vector<ChosenRejected> pairs;      // d_variant
  std::optional<ResponseRecord> target;   // full / s_variant
  std::vector<TournamentDecision> trace;
};

/// full: tournament winner. d_variant: each candidate judged against
/// response[0], decided rounds become chosen/rejected pairs. s_variant: the
/// first candidate preferred over response[0], else response[0].
VariantResult select_variant(Variant v, const gateway::Client& rm, const cognition::SampleView& s,
                             const SituatedCognition& c, const CandidateSet& cs, OrderPolicy policy);

struct SelectionOutput {
  std::vector<CandidateSet> selected;  // with traces; full only
  std::vector<ResponseRecord> targets;
  std::vector<ChosenRejected> pairs;
  std::vector<QuarantineRecord> quarantined;
};

SelectionOutput run_selection(Variant v, const gateway::Client& rm, const std::vector<Sample>& samples,
                              const std::vector<EstimateRecord>& estimates, const std::vector<CandidateSet>& sets,
                              const roleset::Registry& rolesets, OrderPolicy policy, int max_parallel);

}  // namespace pcog::reward
