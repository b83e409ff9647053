#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wmlab {

// Failure classes raised across the library. The CLI maps structural
// decode failures and value/shape validation failures onto distinct
// exit codes, so every throw site picks one class deliberately.
enum class ErrorKind {
  DimensionMismatch,
  InvariantViolation,
  IntractableDomain,
  MalformedHeader,
  PixelOutOfRange,
  TruncatedPayload,
  NonBinaryDigit,
  GrammarError,
  MissingSection,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0)
      : std::runtime_error(line > 0 ? message + " (line " + std::to_string(line) + ")"
                                    : message),
        kind_(kind),
        line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }

  // 1-based input line for parse errors, 0 when not applicable.
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m) : Error(ErrorKind::DimensionMismatch, m) {}
};

struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& m, std::size_t line = 0)
      : Error(ErrorKind::InvariantViolation, m, line) {}
};

struct IntractableDomain : Error {
  explicit IntractableDomain(const std::string& m) : Error(ErrorKind::IntractableDomain, m) {}
};

struct MalformedHeader : Error {
  explicit MalformedHeader(const std::string& m, std::size_t line = 0)
      : Error(ErrorKind::MalformedHeader, m, line) {}
};

struct PixelOutOfRange : Error {
  explicit PixelOutOfRange(const std::string& m, std::size_t line = 0)
      : Error(ErrorKind::PixelOutOfRange, m, line) {}
};

struct TruncatedPayload : Error {
  explicit TruncatedPayload(const std::string& m, std::size_t line = 0)
      : Error(ErrorKind::TruncatedPayload, m, line) {}
};

struct NonBinaryDigit : Error {
  explicit NonBinaryDigit(const std::string& m, std::size_t line = 0)
      : Error(ErrorKind::NonBinaryDigit, m, line) {}
};

struct GrammarError : Error {
  explicit GrammarError(const std::string& m, std::size_t line = 0)
      : Error(ErrorKind::GrammarError, m, line) {}
};

struct MissingSection : Error {
  explicit MissingSection(const std::string& m, std::size_t line = 0)
      : Error(ErrorKind::MissingSection, m, line) {}
};

}  // namespace wmlab
