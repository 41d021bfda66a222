#pragma once

#include <stdexcept>
#include <string>

namespace jseq {

enum class ErrorKind {
  kInvalidDigit,
  kOutOfRange,
  kNotIrrational,
  kNotCoprime,
  kDomain,
  kPrecondition,
  kUnknownName,
  kInvalidGaps,
  kUnsupportedStream,
  kIncompleteTable,
  kTheoremFalsified,
  kEngineMismatch,
};

const char* to_string(ErrorKind kind);

// Internal invariant violations (exit code 3 in the CLI) as opposed to
// rejected inputs (exit code 2).
constexpr bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::kIncompleteTable ||
         kind == ErrorKind::kTheoremFalsified ||
         kind == ErrorKind::kEngineMismatch;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace jseq
