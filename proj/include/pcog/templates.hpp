#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pcog::templates {

struct PromptTemplate {
  std::string id;
  std::string title;
  std::string body;
  std::vector<std::string> required_slots;  // first-occurrence order
  bool verbatim = true;  // false: text authored for this toolkit, not a published prompt
};

using Slots = std::map<std::string, std::string, std::less<>>;

/// Every shipped template, published prompts first.
const std::vector<PromptTemplate>& registry();
/// Throws kNotFound for an unknown id.
const PromptTemplate& get(std::string_view id);
bool has(std::string_view id);

/// Names of `{identifier}` placeholders in first-occurrence order, deduplicated.
std::vector<std::string> placeholders(std::string_view body);

/// Single-pass substitution: slot values are inserted literally and never
/// rescanned. Throws kInvalidArgument naming the first missing slot.
std::string render(const PromptTemplate& t, const Slots& slots);
std::string render(std::string_view id, const Slots& slots);

/// sha256 of the body, hex.
std::string checksum(const PromptTemplate& t);

}  // namespace pcog::templates
