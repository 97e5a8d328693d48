#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcog::text {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
bool starts_with_icase(std::string_view s, std::string_view prefix);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string replace_all(std::string s, std::string_view from, std::string_view to);

/// Whitespace-delimited, lowercased tokens.
std::vector<std::string> whitespace_tokens(std::string_view s);
/// Lowercased runs of alphanumerics; punctuation separates tokens.
std::vector<std::string> word_tokens(std::string_view s);

/// Stable 64-bit FNV-1a (identical across processes and platforms).
std::uint64_t fnv1a64(std::string_view s, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::string& path);
std::string base64_encode(std::string_view data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Bracketed quoted-string list:
///
///   list  := '[' ws ( item ( ws ',' ws item )* )? ws ','? ws ']'
///   item  := '"' chars '"' | '\'' chars '\''
///
/// An item closes at the first matching quote that is followed by optional
/// whitespace and then ',' or ']', so apostrophes inside single-quoted items
/// ("'I'm worried'") survive. Backslash escapes the next character.
/// Returns nullopt when `s` at `pos` does not start a well-formed list.
std::optional<std::vector<std::string>> parse_quoted_list_at(std::string_view s,
                                                             std::size_t pos,
                                                             std::size_t* end = nullptr);

/// First well-formed list in `s`, searching from `after` when given.
std::optional<std::vector<std::string>> find_quoted_list(std::string_view s,
                                                         std::string_view after = {});

/// Renders `['a', 'b']` (single quotes) or `["a", "b"]`. With `escape`, quotes
/// and backslashes inside items are backslash-escaped so the parser inverts it
/// for arbitrary items; prompts use the unescaped form.
std::string render_quoted_list(const std::vector<std::string>& items, char quote = '\'',
                               bool escape = false);

/// Removes one layer of matching surrounding quotes.
std::string strip_quotes(std::string_view s);

}  // namespace pcog::text
