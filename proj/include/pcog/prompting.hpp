#pragma once

// Shared plumbing for stages that render a template, call an endpoint and
// parse the completion.

#include <optional>
#include <string>
#include <vector>

#include "pcog/error.hpp"
#include "pcog/gateway.hpp"
#include "pcog/records.hpp"
#include "pcog/roleset.hpp"
#include "pcog/templates.hpp"

namespace pcog {

/// Temperature added to the endpoint default for the single parse retry.
inline constexpr double kRetryTemperatureBump = 0.2;

template <class T>
struct StageResult {
  std::vector<T> items;
  std::vector<QuarantineRecord> quarantined;
};

/// Single-turn request: optional system text, then one user turn with an
/// optional image followed by the prompt text.
gateway::ChatRequest prompt_request(std::string template_id, std::string user_text,
                                    std::optional<std::string> image_ref, std::string correlation_id,
                                    std::optional<std::string> system_text = std::nullopt);

/// Completes `req` and parses it. On ParseError the request is retried once,
/// at `retry_temperature` when given, else at the endpoint default plus
/// kRetryTemperatureBump. A second failure propagates with the raw text.
template <class Parse>
auto complete_parsed(const gateway::Client& client, gateway::ChatRequest req, Parse parse,
                     std::optional<double> retry_temperature = std::nullopt) {
  {
    const std::string raw = client.complete(req);
    try {
      return parse(raw);
    } catch (const ParseError&) {
    }
  }
  req.temperature = retry_temperature.value_or(client.config().temperature + kRetryTemperatureBump);
  return parse(client.complete(req));
}

/// Role-Set slots shared by the published prompts:
///   individual_role_set, individual_RoleSet_str  canonical "Role@Location; ..." form
///   primary_RoleSet_desc, secondary_RoleSet_desc  prose lines for `location`
templates::Slots roleset_slots(const roleset::RoleSet& rs, std::string_view location,
                               const roleset::RoleCatalog& catalog);

/// Quarantine entry for an exception thrown while processing `sample_id`.
QuarantineRecord quarantine_from(const std::string& sample_id, const std::string& stage,
                                 const std::exception& e);

}  // namespace pcog
