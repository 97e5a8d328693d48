#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcog/eval.hpp"
#include "pcog/records.hpp"
#include "pcog/roleset.hpp"

namespace pcog::annotation {

enum class TaskKind { kPairwise, kRankTop3 };
const char* to_string(TaskKind k);
TaskKind parse_task_kind(const std::string& s);

/// A unit of human work. Fields below the divider never leave the server.
struct Task {
  std::string id;
  TaskKind kind = TaskKind::kPairwise;
  std::string sample_id;
  std::string image_ref;
  std::string roleset_text;
  std::string query;
  std::vector<std::string> responses;  // shown order; pairwise: [X, Y]
  std::vector<std::string> labels;     // "X"/"Y" or "1".."N"
  // -- hidden --
  std::vector<std::string> methods;  // pairwise: method behind X, Y
  std::vector<int> permutation;      // shown position -> original candidate index
  std::string method;                // pairwise: the method under test
  std::optional<eval::Pref> auto_pref;   // pairwise: automatic verdict for `method`
  std::optional<int> selected_index;     // rank: pipeline choice, original indexing

  friend bool operator==(const Task&, const Task&) = default;
};

/// Public (blinded) view.
nlohmann::json public_view(const Task& t, const std::string& status);
void to_json(nlohmann::json& j, const Task& t);
void from_json(const nlohmann::json& j, Task& t);

struct Judgment {
  std::string task_id;
  std::string annotator_id;
  std::optional<std::string> verdict;  // pairwise: win (X better) | tie | lose
  std::optional<std::array<int, 3>> ranking;  // rank: shown positions, best first
  std::string timestamp;

  friend bool operator==(const Judgment&, const Judgment&) = default;
};
void to_json(nlohmann::json& j, const Judgment& v);
void from_json(const nlohmann::json& j, Judgment& v);

struct Pool {
  int quota = 1;  // annotators per task
  std::vector<Task> tasks;
};
void to_json(nlohmann::json& j, const Pool& p);
void from_json(const nlohmann::json& j, Pool& p);
Pool load_pool(const std::string& path);
void save_pool(const std::string& path, const Pool& p);

/// Blinded method-vs-reference tasks, one per sample present in both inputs.
/// `auto_prefs` maps sample id to the automatic verdict for `method`.
std::vector<Task> pairwise_tasks(const std::vector<Sample>& samples, const roleset::Registry& rolesets,
                                 const std::vector<ResponseRecord>& method, const std::vector<ResponseRecord>& reference,
                                 const std::map<std::string, eval::Pref>& auto_prefs, std::uint64_t seed);
/// Shuffled top-3 ranking tasks over each candidate set with a selection.
std::vector<Task> rank_tasks(const std::vector<Sample>& samples, const roleset::Registry& rolesets,
                             const std::vector<CandidateSet>& sets, std::uint64_t seed);

/// Seeded Fisher-Yates permutation of [0, n).
std::vector<int> seeded_permutation(std::size_t n, std::uint64_t seed);

struct AgreementStats {
  eval::AgreementMatrix matrix;
};
struct HitkStats {
  std::array<double, 3> rates{};
  std::size_t n = 0;
};

/// Task pool plus append-only judgment log. Thread-safe; assignment and
/// submission are serialized under one mutex. Reopening replays the log.
class Store {
 public:
  Store(Pool pool, std::string log_path);

  /// An open task this annotator has not judged; a task already leased to
  /// them is returned again. With quota q, at most q annotators hold or have
  /// judged a task at once.
  std::optional<Task> next(const std::string& annotator, TaskKind kind);
  const Task* find(const std::string& id) const;
  std::string status(const std::string& id) const;

  /// kNotFound, kInvalidArgument (shape), kConflict (duplicate or closed).
  void submit(Judgment j);

  std::vector<Judgment> judgments() const;
  /// kNotFound when no judged task of the kind exists.
  AgreementStats agreement() const;
  HitkStats hitk() const;

 private:
  void apply(const Judgment& j);
  void check(const Judgment& j) const;

  mutable std::mutex mu_;
  Pool pool_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::set<std::string>> judged_;
  std::map<std::string, std::set<std::string>> leased_;
  std::vector<Judgment> log_;
  std::string log_path_;
};

/// Pairwise verdict (X-relative) to the tested method's preference.
eval::Pref deblind(const Task& t, const std::string& verdict);
/// Shown positions to original candidate indices.
std::array<int, 3> deblind_ranking(const Task& t, const std::array<int, 3>& shown);

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 0;  // 0: any free port
  std::string images_root;
  std::string ui_root;
};

/// HTTP front end over a Store. Runs on its own thread until stop().
class Server {
 public:
  Server(std::shared_ptr<Store> store, ServerOptions opts);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds and starts serving; returns the bound port.
  int start();
  /// Serves on the calling thread until stop() from elsewhere.
  void run_blocking();
  void stop();
  int port() const { return port_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
};

}  // namespace pcog::annotation
