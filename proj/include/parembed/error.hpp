#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parembed {

enum class Errc {
  syntax,
  duplicate_generator,
  unknown_generator,
  dimension_mismatch,
  dimension_too_small,
  even_dimension,
  odd_dimension,
  wrong_dimension,
  unknown_entries,
  overflow,
  parity,
  hypothesis_failure,
  validation_failure,
  generator_count_mismatch,
  indeterminate_semi_characteristic,
  unknown_key,
  duplicate_key,
  invalid_argument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

  // Input-consistency errors (exit code 3 at the CLI) as opposed to
  // malformed input (exit code 2).
  bool is_inconsistency() const noexcept {
    return code_ == Errc::validation_failure || code_ == Errc::parity;
  }

 private:
  Errc code_;
};

// `position` is a byte offset for presentations and matrices, a 1-based
// line number for descriptor files.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(Errc::syntax, what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Raised when a semi-characteristic is needed but mod-2 Betti entries are
// missing; carries the degrees the caller must supply.
class IndeterminateError : public Error {
 public:
  IndeterminateError(Errc code, std::vector<std::size_t> missing_degrees, const std::string& what)
      : Error(code, what), missing_(std::move(missing_degrees)) {}
  const std::vector<std::size_t>& missing_degrees() const noexcept { return missing_; }

 private:
  std::vector<std::size_t> missing_;
};

}  // namespace parembed
