#pragma once

#include <stdexcept>
#include <string>

namespace homjet {

/// Error taxonomy mirrored by the CLI exit codes.
enum class ErrorKind { validation = 1, parse = 2, internal = 3 };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), m_kind(kind) {}
  ErrorKind kind() const { return m_kind; }

private:
  ErrorKind m_kind;
};

/// Input fails a mathematical precondition (bad Lie algebra, non-reductive split, ...).
class ValidationError : public Error {
public:
  explicit ValidationError(std::string msg) : Error(ErrorKind::validation, std::move(msg)) {}
};

/// Malformed text input (scalar grammar, space definition file, CLI arguments).
class ParseError : public Error {
public:
  explicit ParseError(std::string msg) : Error(ErrorKind::parse, std::move(msg)) {}
};

/// An internal invariant failed; indicates a bug, never bad user input.
class InternalError : public Error {
public:
  explicit InternalError(std::string msg) : Error(ErrorKind::internal, std::move(msg)) {}
};

inline void check_internal(bool cond, const char* what) {
  if (!cond) throw InternalError(what);
}

} // namespace homjet
