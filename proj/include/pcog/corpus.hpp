#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "pcog/error.hpp"
#include "pcog/records.hpp"

namespace pcog::corpus {

/// Serializes one compact record per line with sorted keys, so equal
/// records always produce equal bytes.
template <class T>
std::string to_jsonl(const std::vector<T>& records) {
  std::string out;
  for (const auto& r : records) {
    out += nlohmann::json(r).dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
    out += '\n';
  }
  return out;
}

/// Parses line-delimited records. Errors carry the 1-based line number.
template <class T>
std::vector<T> from_jsonl(std::string_view contents, const std::string& origin = "<memory>") {
  std::vector<T> out;
  std::set<std::string> keys;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    ++line_no;
    const auto nl = contents.find('\n', pos);
    const bool terminated = nl != std::string_view::npos;
    const auto line = contents.substr(pos, terminated ? nl - pos : std::string_view::npos);
    pos = terminated ? nl + 1 : contents.size();
    if (line.empty() && terminated) continue;
    T rec;
    try {
      rec = nlohmann::json::parse(line).get<T>();
    } catch (const std::exception& e) {
      throw ParseError(fmt::format("{}:{}: malformed record: {}", origin, line_no, e.what()),
                       std::string(line));
    }
    const std::string key = record_key(rec);
    if (!key.empty() && !keys.insert(key).second)
      fail(ErrorCode::kIntegrity, fmt::format("{}:{}: duplicate id '{}'", origin, line_no, key));
    out.push_back(std::move(rec));
  }
  return out;
}

void write_text_atomic(const std::string& path, std::string_view contents);
std::string read_text(const std::string& path);

template <class T>
void save_jsonl(const std::string& path, const std::vector<T>& records) {
  write_text_atomic(path, to_jsonl(records));
}

template <class T>
std::vector<T> load_jsonl(const std::string& path) {
  return from_jsonl<T>(read_text(path), path);
}

/// Append-only line log. Each append writes one complete line under a lock
/// and flushes, so readers never observe half a record.
class AppendLog {
 public:
  explicit AppendLog(std::string path);
  void append(const nlohmann::json& record);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::mutex mu_;
  std::ofstream out_;
};

struct DatasetManifest {
  std::string name;
  std::map<std::string, std::size_t> counts;        // split → records
  std::map<std::string, std::string> image_manifest;  // scene description → image_ref
  std::map<std::string, std::string> checksums;       // file name → sha256

  friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

void to_json(nlohmann::json& j, const DatasetManifest& m);
void from_json(const nlohmann::json& j, DatasetManifest& m);

std::string manifest_path_for(const std::string& data_path);

/// Writes samples plus "<path>.manifest.json" (counts per split, checksum).
DatasetManifest save_samples(const std::vector<Sample>& samples, const std::string& path,
                             const std::string& name = {},
                             const std::map<std::string, std::string>& image_manifest = {});
/// Loads samples; when a manifest sits beside the file its checksum and
/// counts must match.
std::vector<Sample> load_samples(const std::string& path);

/// Train/test sample counts.
std::map<std::string, std::size_t> split_counts(const std::vector<Sample>& samples);

/// Sample ids whose image_ref does not exist under `images_root`.
std::vector<std::string> missing_images(const std::vector<Sample>& samples,
                                        const std::filesystem::path& images_root);
/// Throws when any image is missing.
void require_images(const std::vector<Sample>& samples, const std::filesystem::path& images_root);

struct CorpusStats {
  std::size_t total = 0;
  std::map<std::string, std::size_t> per_subset;
  std::map<std::string, std::size_t> per_location;
  std::map<std::string, std::size_t> per_roleset;
  std::map<std::string, std::size_t> per_split;
  std::map<std::string, std::size_t> query_tokens;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats corpus_stats(const std::vector<Sample>& samples);
nlohmann::json to_json(const CorpusStats& s);

}  // namespace pcog::corpus
