#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcog/gateway.hpp"
#include "pcog/prompting.hpp"
#include "pcog/records.hpp"
#include "pcog/roleset.hpp"

namespace pcog::eval {

/// Per-(Role-Set, location) general expectations feeding the oracle prompt.
/// File format: {"<roleset id>": {"<location>": "<text>", ...}, ...}.
class Expectations {
 public:
  Expectations() = default;
  static Expectations from_json(const nlohmann::json& j);
  static Expectations load(const std::string& path);
  nlohmann::json to_json() const;

  void set(const std::string& roleset_id, const std::string& location, std::string text);
  /// kNotFound when the slot is missing or empty.
  const std::string& at(const std::string& roleset_id, const std::string& location) const;
  std::size_t size() const { return slots_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, std::string> slots_;
};

/// Editable placeholder texts for every (Role-Set, subset location) slot.
Expectations placeholder_expectations(const std::vector<roleset::RoleSet>& rolesets);

std::string render_oracle(const Sample& s, const roleset::RoleSet& rs, const std::string& general_expectation,
                          const roleset::RoleCatalog& catalog);
/// Completed interview form for a test sample; train samples are rejected.
std::string gen_oracle_guidance(const gateway::Client& client, const Sample& s, const roleset::RoleSet& rs,
                                const std::string& general_expectation, const roleset::RoleCatalog& catalog);

StageResult<Sample> run_oracle(const gateway::Client& client, const std::vector<Sample>& samples,
                               const roleset::Registry& rolesets, const Expectations& expectations,
                               const roleset::RoleCatalog& catalog, int max_parallel);

enum class Dim { kRsa, kBba, kMfa, kCa, kCf };
inline constexpr std::array<const char*, 5> kDimLabels = {
    "Role-Set Sensitivity", "Body Behavior Awareness", "Mind Feelings Awareness", "Contextual Awareness",
    "Conversational Flow"};
inline constexpr std::array<const char*, 5> kDimKeys = {"rsa", "bba", "mfa", "ca", "cf"};
/// Label (form or prose spelling, any case/punctuation) to dimension.
std::optional<Dim> dim_from_label(std::string_view label);

double p_score(const DimScores& s);

struct ParsedEval {
  DimScores scores;
  std::string explanation;
};
/// Five [[integer]] scores from the result block, placed by label when every
/// line is labelled, else by line order. Throws ParseError on a count or
/// range violation.
ParsedEval parse_eval(const std::string& raw);

std::string render_eval(const Sample& s, const std::string& response);
/// Retries once at temperature 0 on malformed output.
EvalRecord judge_response(const gateway::Client& judge, const Sample& s, const std::string& method,
                          const std::string& response);

StageResult<EvalRecord> run_judging(const gateway::Client& judge, const std::vector<Sample>& samples,
                                    const std::vector<ResponseRecord>& responses, int max_parallel);

struct MetricsReport {
  std::string method;
  std::string reference;  // empty: no comparison
  std::size_t n = 0;
  std::array<double, 5> dim_means{};
  double mean_p_score = 0.0;
  double win = 0.0, tie = 0.0, lose = 0.0;  // percent of joined samples
};
void to_json(nlohmann::json& j, const MetricsReport& r);

/// Join on sample_id; kInvalidArgument when the join is empty.
MetricsReport aggregate(const std::vector<EvalRecord>& method, const std::vector<EvalRecord>& reference);
/// Means only, over every record.
MetricsReport summarize(const std::vector<EvalRecord>& records);

bool hit_at_k(int selected_index, const std::array<int, 3>& human_top3, int k);
struct HitCase {
  int selected_index = 0;
  std::array<int, 3> human_top3{};
};
/// Corpus rates for k = 1, 2, 3.
std::array<double, 3> hit_rates(const std::vector<HitCase>& cases);

enum class Pref { kWin, kTie, kLose };
const char* to_string(Pref p);
Pref parse_pref(const std::string& s);
Pref pref_of(double method, double reference);

struct AgreementMatrix {
  std::array<std::array<int, 3>, 3> counts{};  // [auto][human], win/tie/lose
  int total = 0;
  double diagonal_share = 0.0;  // percent
};
AgreementMatrix agreement_matrix(const std::map<std::string, Pref>& automatic, const std::map<std::string, Pref>& human);

/// Fixed-width text: one row per method with dimension means, P. Score and
/// Win/Tie/Lose.
std::string render_table(const std::vector<MetricsReport>& rows);
std::string render_agreement(const AgreementMatrix& m);

}  // namespace pcog::eval
