#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gundam {

struct ParseError : std::runtime_error {
  std::size_t offset;
  std::string expected;
  ParseError(std::size_t offset_, std::string expected_)
      : std::runtime_error("parse error at byte " + std::to_string(offset_) +
                           ": expected " + expected_),
        offset(offset_),
        expected(std::move(expected_)) {}
};

struct SchemaError : std::runtime_error {
  std::size_t line;
  SchemaError(std::size_t line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidCell : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotBipartite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidGraph : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ClientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientExemplars : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RewriteBackendUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gundam
