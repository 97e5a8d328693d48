#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcog/cognition.hpp"
#include "pcog/gateway.hpp"
#include "pcog/records.hpp"
#include "pcog/roleset.hpp"

namespace pcog::baselines {

std::string base_system_text();
/// Role-Set system message: prose list plus the canonical string.
std::string rs_prompt_system_text(const roleset::RoleSet& rs);

/// Image + query only.
std::string base_response(const gateway::Client& client, const cognition::SampleView& s);
/// Image + query under the Role-Set system message.
std::string rs_prompt_response(const gateway::Client& client, const cognition::SampleView& s);

/// Unit-cost edit distance over bytes.
std::size_t levenshtein(std::string_view a, std::string_view b);

struct RagHit {
  const Sample* sample = nullptr;
  std::size_t distance = 0;
};

/// The k pool samples whose Role-Set string is closest to the query
/// sample's, ties broken by sample id; the query sample itself is skipped.
std::vector<RagHit> rag_retrieve(const cognition::SampleView& s, const std::vector<Sample>& pool,
                                 const roleset::Registry& rolesets, std::size_t k = 3);

/// In-context block for the retrieved samples; `references` maps sample id
/// to a reference response and is optional per example.
std::string rag_examples_text(const std::vector<RagHit>& hits, const roleset::Registry& rolesets,
                              const std::map<std::string, std::string>& references);
std::string rag_response(const gateway::Client& client, const cognition::SampleView& s,
                         const std::vector<RagHit>& hits, const roleset::Registry& rolesets,
                         const std::map<std::string, std::string>& references);

/// Scorer output to 1..5: a parenthesized digit wins, then an adherence
/// label (Poor, Fair, Moderate, Good, Excellent), then a lone digit.
std::optional<int> parse_score(const std::string& raw);

struct RefineState {
  int iteration = 0;
  std::string response;
  std::optional<int> score;  // nullopt: unparseable, iteration invalid
  std::string feedback;
  bool valid = true;

  friend bool operator==(const RefineState&, const RefineState&) = default;
};

struct SelfRefineResult {
  std::string final_response;
  std::vector<RefineState> history;  // one entry per iteration
};

/// Scores and critiques `initial`, then runs `iterations` rounds of
/// refine -> score -> feedback. An unparseable score marks the round invalid
/// and carries the previous response and feedback forward.
SelfRefineResult self_refine(const gateway::Client& client, const cognition::SampleView& s, const KeyPoints& k,
                             const std::string& initial, int iterations = 3);

/// Chosen: ResG with key points over the Role-Set prompt response; rejected:
/// the Role-Set prompt response.
ChosenRejected rlcd_pair(const gateway::Client& client, const cognition::SampleView& s, const KeyPoints& k,
                         const std::string& rs_response);

/// First "[[A]]" or "[[B]]" token; ParseError when neither occurs.
char parse_rlaif(const std::string& raw);
char rlaif_judge(const gateway::Client& judge, const cognition::SampleView& s, const std::string& resp_a,
                 const std::string& resp_b);

}  // namespace pcog::baselines
