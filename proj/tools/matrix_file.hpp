#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "nilcert/error.hpp"
#include "nilcert/matrix.hpp"

// Text format:
//
//   cmat <n>
//   <n lines of n whitespace-separated entries>
//
// An entry is `<real>` or `<real><sign><imag>i` without interior spaces, where
// both parts are decimal literals with an optional exponent: `2`, `-3.5`,
// `1e-3`, `0+1i`, `2-0.5i`. Blank lines are ignored.
namespace nilcert::cli {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses one entry; throws std::invalid_argument describing the defect.
Complex parse_scalar(std::string_view token);

/// Shortest text that reads back to exactly the same value.
std::string format_scalar(Complex z);

ComplexMatrix parse_matrix(std::string_view text);
std::string format_matrix(const ComplexMatrix& m);

/// Throws nilcert::Error when the file cannot be opened or written.
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

}  // namespace nilcert::cli
