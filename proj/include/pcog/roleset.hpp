#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcog::roleset {

struct RoleDef {
  std::string name;
  std::string location;
  bool permanent = false;
  std::string description;
};

struct RoleAssignment {
  std::string role;
  std::string location;

  friend bool operator==(const RoleAssignment&, const RoleAssignment&) = default;
};

struct RoleSet {
  std::string id;
  std::string subset;
  std::vector<RoleAssignment> assignments;  // subset location order

  friend bool operator==(const RoleSet&, const RoleSet&) = default;

  /// Role held at `location`, or nullopt when the location is not covered.
  std::optional<std::string> role_at(std::string_view location) const;
};

/// Immutable role catalog. Safe to share across threads.
///
/// The constructor enforces structure (nonempty names, unique
/// (role, location), subsets of 5 known locations). Loaded catalogs are also
/// required to pass `check_satisfiable`.
class RoleCatalog {
 public:
  RoleCatalog() = default;
  RoleCatalog(std::vector<std::string> locations, std::vector<RoleDef> roles,
              std::map<std::string, std::vector<std::string>> subsets);

  /// Every subset location offers at least one non-permanent role.
  void check_satisfiable() const;

  const std::vector<std::string>& locations() const { return locations_; }
  const std::vector<RoleDef>& roles() const { return roles_; }
  const std::map<std::string, std::vector<std::string>>& subsets() const { return subsets_; }

  const RoleDef* find(std::string_view role, std::string_view location) const;
  /// Roles at `location`, sorted by name.
  std::vector<const RoleDef*> roles_at(std::string_view location) const;
  const std::vector<std::string>& subset(std::string_view id) const;
  bool has_location(std::string_view location) const;

 private:
  std::vector<std::string> locations_;
  std::vector<RoleDef> roles_;
  std::map<std::string, std::vector<std::string>> subsets_;
};

/// Catalog file format, one record per line ('#' starts a comment):
///
///   location|<name>
///   role|<location>|<role>|<permanent: yes/no>|<description>
///   subset|<id>|<loc1>,<loc2>,<loc3>,<loc4>,<loc5>
RoleCatalog parse_catalog(std::string_view contents);
RoleCatalog load_catalog(const std::string& path);
/// Built-in seed: 8 locations, 32 roles, subsets LS1 and LS2.
const RoleCatalog& builtin_catalog();
std::string_view builtin_catalog_text();
std::string serialize_catalog(const RoleCatalog& catalog);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_roleset(const RoleSet& rs, const RoleCatalog& catalog);

/// Every one-role-per-location assignment over the subset with exactly one
/// permanent role, in lexicographic order (locations in subset order, roles by
/// name). Ids are "<subset>-R<nnnn>" in that order.
std::vector<RoleSet> enumerate_rolesets(const RoleCatalog& catalog, std::string_view subset);

enum class CohortPolicy { kPaper, kFirst, kSeeded };
CohortPolicy parse_cohort_policy(std::string_view name);

/// Picks `size` sets with pairwise-distinct permanent roles.
std::vector<RoleSet> select_cohort(const std::vector<RoleSet>& candidates, std::size_t size,
                                   CohortPolicy policy, std::uint64_t seed = 0,
                                   const RoleCatalog& catalog = builtin_catalog());

/// The ten published Role-Sets of a subset ("LS1" / "LS2"), ids "<subset>-I<k>".
std::vector<RoleSet> published_cohort(std::string_view subset);

/// Cohort members other than `rs` whose role at `location` differs, in cohort order.
std::vector<RoleSet> negative_rolesets(const RoleSet& rs, std::string_view location,
                                       const std::vector<RoleSet>& cohort);

/// "Role@Location; Role@Location; ..."
std::string to_string(const RoleSet& rs);
/// Inverse of to_string; id and subset are supplied by the caller.
RoleSet parse_roleset(std::string_view text, std::string id = {}, std::string subset = {});

/// "A Child at Home"
std::string prose(const RoleAssignment& a);
/// "Child at Home; Member at Community; ..."
std::string plain_list(const RoleSet& rs);
/// Primary-role line for prompts: "A Child at Home (description);"
std::string primary_desc(const RoleSet& rs, std::string_view location, const RoleCatalog& catalog);
/// Secondary roles for prompts: "A Member at Community; A Student at School; ...;"
std::string secondary_desc(const RoleSet& rs, std::string_view location);
/// Every assignment in prose, "; "-joined: "A Father at Home; A Fireman at Community; ..."
std::string prose_list(const RoleSet& rs);

/// Id → RoleSet lookup over one or more cohorts.
class Registry {
 public:
  Registry() = default;
  explicit Registry(const std::vector<RoleSet>& sets);
  void add(const RoleSet& rs);
  const RoleSet& at(std::string_view id) const;
  const RoleSet* find(std::string_view id) const;
  std::vector<RoleSet> cohort_of(std::string_view subset) const;
  const std::map<std::string, RoleSet, std::less<>>& all() const { return sets_; }

 private:
  std::map<std::string, RoleSet, std::less<>> sets_;
  std::vector<std::string> order_;
};

/// Registry holding both published cohorts.
const Registry& published_registry();

}  // namespace pcog::roleset
