#pragma once

#include <stdexcept>
#include <string>

namespace confmod {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  UnknownSymbol,
  MalformedWord,
  ZeroElement,
  NonMonicRelation,
  NotDFree,
  InvalidDelta,
  NonUniformLocality,
  Io,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the byte offset into the source and the tokens the
/// parser would have accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& message)
      : Error(ErrorCode::ParseError,
              message + " at offset " + std::to_string(offset) +
                  (expected.empty() ? "" : " (expected " + expected + ")")),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace confmod
