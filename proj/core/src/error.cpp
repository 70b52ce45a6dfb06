#include "mso/error.hpp"

namespace mso {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LoopForbidden: return "loop-forbidden";
    case ErrorKind::OutOfBounds: return "out-of-bounds";
    case ErrorKind::MissingEdge: return "missing-edge";
    case ErrorKind::EmptySet: return "empty-set";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Size: return "size";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::UndefinedMean: return "undefined-mean";
    case ErrorKind::NotATree: return "not-a-tree";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::LemmaViolation: return "lemma-violation";
    case ErrorKind::TheoremViolation: return "theorem-violation";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + message), kind_(kind) {}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(ErrorKind::Parse, message + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

}  // namespace mso
