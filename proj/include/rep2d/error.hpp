#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rep2d {

/// Failure categories. The CLI prints the category name verbatim so that
/// scripts can dispatch on it.
enum class ErrorKind {
  invalid_argument,
  dimension_mismatch,
  out_of_bounds,
  parse_error,
  cycle,
  overlap,
  gap,
  self_source,
  source_out_of_bounds,
  dangling_reference,
  invalid_run,
  budget_exceeded,
  too_large,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rep2d
