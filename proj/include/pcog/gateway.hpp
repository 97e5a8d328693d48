#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcog/corpus.hpp"
#include "pcog/error.hpp"

namespace pcog::gateway {

enum class Role { kSystem, kUser, kAssistant };
const char* to_string(Role r);

struct Part {
  enum class Kind { kText, kImage };
  Kind kind = Kind::kText;
  std::string text;        // kText
  std::string image_path;  // kImage: path (resolved against the images root) or URL
  std::string image_base64;  // kImage: pre-embedded data, overrides image_path when set
  std::string mime = "image/jpeg";

  static Part from_text(std::string t);
  static Part from_image(std::string path);
};

struct ChatMessage {
  Role role = Role::kUser;
  std::vector<Part> parts;

  static ChatMessage system(std::string text);
  static ChatMessage user(std::string text, std::optional<std::string> image_path = std::nullopt);
  static ChatMessage assistant(std::string text);
};

/// Throws kInvalidArgument on an empty message or an image outside a user turn.
void validate(const ChatMessage& m);

struct RetryPolicy {
  int max_attempts = 3;
  std::vector<int> backoff_ms = {250, 1000, 4000};
};

struct EndpointConfig {
  std::string backend = "http";  // "http" | "mock"
  std::string base_url;
  std::string model_name;
  std::string api_key_env;
  double temperature = 0.0;
  int max_tokens = 1024;
  std::optional<std::int64_t> request_seed;
  int max_inflight = 4;
  RetryPolicy retry;
  bool image_url_mode = false;
  int timeout_s = 120;
  std::string mock_script = "builtin";  // "builtin" or a script file path

  /// Throws kConfig with the offending field name.
  void validate(const std::string& field_prefix = {}) const;
};

void to_json(nlohmann::json& j, const EndpointConfig& c);
void from_json(const nlohmann::json& j, EndpointConfig& c);

struct ChatRequest {
  std::vector<ChatMessage> messages;
  std::string template_id;     // registry id of the rendered prompt; never sent
  std::string correlation_id;  // sample id or job id; logged
  std::optional<double> temperature;

  /// All text parts joined with newlines, in message order.
  std::string rendered_text() const;
  /// Text of the final user message.
  std::string last_user_text() const;
};

/// Retryable failure (connection loss, 429, 5xx, empty completion).
class TransientError : public Error {
 public:
  explicit TransientError(const std::string& what) : Error(ErrorCode::kTransport, what) {}
};

class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string send(const EndpointConfig& cfg, const ChatRequest& req) = 0;
};

/// OpenAI-compatible body: model, messages (content parts), temperature,
/// max_tokens, seed. Images are embedded as base64 data URLs unless the
/// endpoint runs in URL mode.
nlohmann::json build_request_body(const EndpointConfig& cfg, const ChatRequest& req,
                                  const std::string& images_root);
/// Assistant text of the first choice; throws TransientError when empty.
std::string parse_response_body(const std::string& body);

class HttpBackend : public Backend {
 public:
  explicit HttpBackend(std::string images_root = ".");
  std::string send(const EndpointConfig& cfg, const ChatRequest& req) override;

 private:
  std::string images_root_;
};

/// Scripted responder; the first matching rule wins.
///
/// A rule matcher "template:<id>" matches a request's template id; any other
/// matcher is a substring test over the rendered text. Responses may contain
/// expansion tokens derived from a stable hash of the rendered prompt:
///   {hash}  16 hex digits      {ab}   "A" or "B"
///   {d5}    a digit 1..5 (successive tokens draw fresh bits)
///   {echo}  the final user message text verbatim
///   {choose:x|y|z}  one alternative
///   {pick:TAG}      an item of the last quoted list after "<TAG>"
///   {field:TAG}     the text between the last "<TAG>" and "</TAG>"
struct MockRule {
  std::string matcher;
  std::string response;
};

struct MockScript {
  std::vector<MockRule> rules;
  std::string default_response = "OK";

  std::string respond(const ChatRequest& req) const;
  static MockScript from_json(const nlohmann::json& j);
  static MockScript load(const std::string& path);
  /// Well-formed outputs for every registry template; drives mock pipeline runs.
  static const MockScript& builtin();
};

/// In-process backend over a MockScript, instrumented with call and
/// concurrency counters. `delay` simulates latency for concurrency tests.
class MockBackend : public Backend {
 public:
  explicit MockBackend(MockScript script, std::chrono::milliseconds delay = std::chrono::milliseconds(0));
  std::string send(const EndpointConfig& cfg, const ChatRequest& req) override;

  std::size_t calls() const { return calls_.load(); }
  int peak_inflight() const { return peak_.load(); }
  /// Requests matching `substring` throw kTransport permanently.
  void fail_on(std::string substring) { fail_substring_ = std::move(substring); }

 private:
  MockScript script_;
  std::chrono::milliseconds delay_;
  std::atomic<std::size_t> calls_{0};
  std::atomic<int> inflight_{0};
  std::atomic<int> peak_{0};
  std::string fail_substring_;
};

/// Backend over a callable; used for test judges and capture hooks.
class FunctionBackend : public Backend {
 public:
  using Fn = std::function<std::string(const EndpointConfig&, const ChatRequest&)>;
  explicit FunctionBackend(Fn fn) : fn_(std::move(fn)) {}
  std::string send(const EndpointConfig& cfg, const ChatRequest& req) override { return fn_(cfg, req); }

 private:
  Fn fn_;
};

struct BatchJob {
  std::string id;
  ChatRequest request;
};

struct BatchResult {
  std::optional<std::string> text;
  std::optional<ErrorCode> error_code;
  std::string error;

  bool ok() const { return text.has_value(); }
};

/// Shareable chat-completion client: retries, request logging and bounded
/// parallel batches. Thread-safe.
class Client {
 public:
  Client(EndpointConfig cfg, std::shared_ptr<Backend> backend,
         std::shared_ptr<corpus::AppendLog> log = nullptr);

  std::string complete(const ChatRequest& req) const;
  std::map<std::string, BatchResult> complete_batch(const std::vector<BatchJob>& jobs) const;

  const EndpointConfig& config() const { return cfg_; }
  Backend& backend() const { return *backend_; }

 private:
  struct Gate;

  EndpointConfig cfg_;
  std::shared_ptr<Backend> backend_;
  std::shared_ptr<corpus::AppendLog> log_;
  std::shared_ptr<Gate> gate_;  // caps concurrent sends at max_inflight
};

/// Runs `fn(i)` for i in [0, n) on at most `max_parallel` threads.
void parallel_for(std::size_t n, int max_parallel, const std::function<void(std::size_t)>& fn);

/// Backend for `cfg`: HttpBackend, or MockBackend over the configured script.
std::shared_ptr<Backend> make_backend(const EndpointConfig& cfg, const std::string& images_root);

}  // namespace pcog::gateway
