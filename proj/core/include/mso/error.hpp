#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mso {

enum class ErrorKind {
  LoopForbidden,
  OutOfBounds,
  MissingEdge,
  EmptySet,
  Unsupported,
  Size,
  Parse,
  UndefinedMean,
  NotATree,
  InvalidSpec,
  Domain,
  Precondition,
  LemmaViolation,
  TheoremViolation,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the byte offset of the offending input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace mso
