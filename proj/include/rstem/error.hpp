#pragma once

#include <stdexcept>
#include <string>

namespace rstem {

enum class ErrorKind {
  MalformedHeader,
  MalformedLine,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  EdgeCountMismatch,
  NotATree,
  NotAHostEdge,
  Disconnected,
  NoBranchVertex,
  RejectionLimit,
  EmptyEdgeSet,
  InvalidArgument,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::EdgeCountMismatch: return "EdgeCountMismatch";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotAHostEdge: return "NotAHostEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NoBranchVertex: return "NoBranchVertex";
    case ErrorKind::RejectionLimit: return "RejectionLimit";
    case ErrorKind::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// Single exception type for the library. `line` is 1-based and 0 when the
// error is not tied to an input document.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int line = 0)
      : std::runtime_error(format(kind, message, line)), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message, int line) {
    std::string out = to_string(kind);
    if (line > 0) out += " (line " + std::to_string(line) + ")";
    out += ": ";
    out += message;
    return out;
  }

  ErrorKind kind_;
  int line_;
};

}  // namespace rstem
