#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vrhom {

/// Error categories. Input categories map to CLI exit code 2.
enum class ErrorKind {
  invalid_argument,
  index_out_of_range,
  space_mismatch,
  not_symmetric,
  not_a_cover,
  not_interior_cover,
  not_simplicial,
  no_minimum,
  unsupported_coefficients,
  hypothesis_violated,
  // parse categories
  syntax,
  asymmetric_matrix,
  nonzero_diagonal,
  negative_distance,
  duplicate_label,
  unknown_label,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::index_out_of_range: return "index out of range";
    case ErrorKind::space_mismatch: return "space mismatch";
    case ErrorKind::not_symmetric: return "relation not symmetric";
    case ErrorKind::not_a_cover: return "not a cover";
    case ErrorKind::not_interior_cover: return "not an interior cover";
    case ErrorKind::not_simplicial: return "not a simplicial map";
    case ErrorKind::no_minimum: return "no minimum member";
    case ErrorKind::unsupported_coefficients: return "unsupported coefficients";
    case ErrorKind::hypothesis_violated: return "hypothesis violated";
    case ErrorKind::syntax: return "syntax error";
    case ErrorKind::asymmetric_matrix: return "asymmetric matrix";
    case ErrorKind::nonzero_diagonal: return "nonzero diagonal";
    case ErrorKind::negative_distance: return "negative distance";
    case ErrorKind::duplicate_label: return "duplicate label";
    case ErrorKind::unknown_label: return "unknown label";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure anchored to a 1-based line/column in the input text; line 0
/// means the position is unknown.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(kind, line == 0 ? message
                              : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace vrhom
