#pragma once

#include "idem/concepts.hpp"
#include "idem/errors.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace idem {

/// Dense row-major matrix with entries in one semiring.
template <semiring_like R>
class matrix {
public:
  using ring_type = R;
  using value_type = element_t<R>;

  /// rows x cols matrix filled with the ring's zero.
  matrix(R ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        entries_(rows * cols, ring_.zero()) {}

  matrix(R ring, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw domain_error("matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                         std::to_string(entries_.size()));
    }
    if constexpr (requires { ring_.check(entries_.front()); }) {
      for (const auto& e : entries_) ring_.check(e);
    }
  }

  static matrix identity(R ring, std::size_t n) {
    matrix m(std::move(ring), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.ring_.one();
    return m;
  }

  const R& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<value_type>& entries() const noexcept { return entries_; }

  matrix transposed() const {
    matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Exact entrywise equality (same shape required, ring identity not compared).
  bool equals(const matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (!ring_.equal(entries_[k], other.entries_[k])) return false;
    return true;
  }

  friend bool operator==(const matrix& a, const matrix& b) {
    return a.ring_ == b.ring_ && a.equals(b);
  }

private:
  R ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> entries_;
};

namespace detail {
template <semiring_like R>
void require_same_ring(const matrix<R>& a, const matrix<R>& b, const char* op) {
  if (!(a.ring() == b.ring())) {
    throw domain_error(std::string(op) + ": ring mismatch (" + std::string(a.ring().name()) +
                       " vs " + std::string(b.ring().name()) + ")");
  }
}
} // namespace detail

template <semiring_like R>
matrix<R> operator+(const matrix<R>& a, const matrix<R>& b) {
  detail::require_same_ring(a, b, "matrix add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw domain_error("matrix add: shape mismatch");
  }
  matrix<R> c(a.ring(), a.rows(), a.cols());
  const R& ring = a.ring();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.add(a(i, j), b(i, j));
  return c;
}

/// C(i, j) = sum_k A(i, k) * B(k, j) with the ring's operations.
template <semiring_like R>
matrix<R> operator*(const matrix<R>& a, const matrix<R>& b) {
  detail::require_same_ring(a, b, "matrix multiply");
  if (a.cols() != b.rows()) {
    throw domain_error("matrix multiply: " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                       std::to_string(b.cols()));
  }
  const R& ring = a.ring();
  matrix<R> c(ring, a.rows(), b.cols());
  const auto zero = ring.zero();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (ring.equal(aik, zero)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = ring.add(c(i, j), ring.mul(aik, b(k, j)));
    }
  }
  return c;
}

template <semiring_like R>
std::string format(const matrix<R>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m.ring().format(m(i, j));
    }
    out += '\n';
  }
  return out;
}

} // namespace idem
