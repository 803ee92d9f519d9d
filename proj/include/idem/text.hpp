#pragma once

#include "idem/errors.hpp"
#include "idem/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace idem {

/// Splits a line on whitespace, keeping a bracketed "[lo, hi]" as one token.
std::vector<std::string> split_tokens(std::string_view line);

/// Lines of `text` with comments ('#' to end of line) stripped, paired with
/// their 1-based line numbers. Blank lines are dropped.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text);

/// Reads a matrix written as rows of whitespace-separated entries. Entries are
/// parsed by the ring, so "inf", "-inf" and "_" (the ring's zero) work, and
/// interval rings accept "[lo, hi]".
template <class R>
matrix<R> parse_matrix(const R& ring, std::string_view text) {
  std::vector<element_t<R>> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  for (const auto& [line_no, line] : content_lines(text)) {
    const auto tokens = split_tokens(line);
    if (rows == 0) cols = tokens.size();
    if (tokens.size() != cols) {
      throw parse_error("expected " + std::to_string(cols) + " entries, found " +
                            std::to_string(tokens.size()),
                        line_no);
    }
    for (const auto& t : tokens) {
      try {
        entries.push_back(ring.parse(t));
      } catch (const std::exception& e) {
        throw parse_error(e.what(), line_no);
      }
    }
    ++rows;
  }
  if (rows == 0) throw parse_error("empty matrix");
  return matrix<R>(ring, rows, cols, std::move(entries));
}

} // namespace idem
