#pragma once

#include <stdexcept>
#include <string>

namespace pcog {

enum class ErrorCode {
  kInvalidArgument = 1,
  kParse,
  kNotFound,
  kIo,
  kTransport,
  kIntegrity,
  kConfig,
  kInfeasible,
  kQuarantine,
  kConflict,
  kInternal,
};

const char* to_string(ErrorCode code) noexcept;

/// Base error carried through every module. The C API maps `code()` onto
/// its status enum one to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure that keeps the raw model output for quarantine records.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string raw = {})
      : Error(ErrorCode::kParse, what), raw_(std::move(raw)) {}

  const std::string& raw() const noexcept { return raw_; }

 private:
  std::string raw_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace pcog
