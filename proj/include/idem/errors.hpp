#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idem {

/// A value lies outside a semiring's carrier, or operands do not fit together.
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The operation is not meaningful for the given semiring (e.g. the standard
/// order on a non-idempotent semiring).
class unsupported_operation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Partial sums of a closure did not stabilize. Carries the entry that was
/// still changing when the iteration budget ran out.
class divergence_error : public std::runtime_error {
public:
  divergence_error(const std::string& what, std::size_t row, std::size_t col)
      : std::runtime_error(what), row_(row), col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

private:
  std::size_t row_;
  std::size_t col_;
};

/// Malformed textual input. `line()` is 1-based, 0 when not line oriented.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace idem
