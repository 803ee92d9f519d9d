#pragma once

#include "idem/interval.hpp"
#include "idem/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace idem {

enum class bellman_method { jacobi, gauss_seidel, star };

std::string_view to_string(bellman_method method) noexcept;
/// "jacobi", "gauss-seidel" or "star"; throws domain_error otherwise.
bellman_method parse_bellman_method(std::string_view name);

/// Result of solving X = H X + F. When `converged` is set, `x` satisfies the
/// equation exactly.
template <semiring_like R>
struct bellman_solution {
  matrix<R> x;
  std::size_t iterations = 0;
  bool converged = false;
  bellman_method method = bellman_method::star;
};

namespace detail {

template <semiring_like R>
void require_square(const matrix<R>& h, const char* op) {
  if (!h.square()) throw domain_error(std::string(op) + ": coefficient matrix must be square");
  if (!h.ring().is_idempotent()) {
    throw unsupported_operation(std::string(op) + ": needs an idempotent semiring, got " +
                                std::string(h.ring().name()));
  }
}

template <semiring_like R>
void require_system(const matrix<R>& h, const matrix<R>& f, const char* op) {
  require_square(h, op);
  require_same_ring(h, f, op);
  if (f.rows() != h.rows()) {
    throw domain_error(std::string(op) + ": right-hand side has " + std::to_string(f.rows()) +
                       " rows, expected " + std::to_string(h.rows()));
  }
}

/// First entry where a and b differ, as (row, col).
template <semiring_like R>
std::pair<std::size_t, std::size_t> first_difference(const matrix<R>& a, const matrix<R>& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.ring().equal(a(i, j), b(i, j))) return {i, j};
  return {a.rows(), a.cols()};
}

} // namespace detail

/**
 * Closure H* = I + H + H^2 + ... of a square matrix over an idempotent
 * semiring, returned together with the number of partial-sum steps taken.
 *
 * Partial sums S_k = I + H S_{k-1} are formed until two consecutive ones
 * agree. If S_n still differs from S_{n-1} (n = dimension), the powers of H
 * keep contributing past every simple path and a divergence_error is thrown
 * naming the first entry that changed.
 */
template <semiring_like R>
bellman_solution<R> kleene_star_solution(const matrix<R>& h) {
  detail::require_square(h, "kleene star");
  const std::size_t n = h.rows();
  const matrix<R> id = matrix<R>::identity(h.ring(), n);
  matrix<R> sum = id;
  for (std::size_t k = 1;; ++k) {
    matrix<R> next = id + h * sum;
    if (next.equals(sum)) return {std::move(sum), k, true, bellman_method::star};
    if (k >= n) {
      const auto [i, j] = detail::first_difference(sum, next);
      throw divergence_error("closure does not stabilize: entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") changes from " +
                                 h.ring().format(sum(i, j)) + " to " +
                                 h.ring().format(next(i, j)) + " after " + std::to_string(n) +
                                 " steps",
                             i, j);
    }
    sum = std::move(next);
  }
}

template <semiring_like R>
matrix<R> kleene_star(const matrix<R>& h) {
  return kleene_star_solution(h).x;
}

/// Minimal solution X = H* F of X = H X + F via the closure.
template <semiring_like R>
bellman_solution<R> solve_bellman_star(const matrix<R>& h, const matrix<R>& f) {
  detail::require_system(h, f, "bellman (star)");
  auto star = kleene_star_solution(h);
  return {star.x * f, star.iterations, true, bellman_method::star};
}

/// Simultaneous-update iteration X_{k+1} = H X_k + F starting from X_0 = F,
/// stopped at the first exact repeat. Running out of iterations is reported
/// through `converged == false`, not an exception.
template <semiring_like R>
bellman_solution<R> solve_bellman_jacobi(const matrix<R>& h, const matrix<R>& f,
                                         std::size_t max_iter) {
  detail::require_system(h, f, "bellman (jacobi)");
  matrix<R> x = f;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    matrix<R> next = h * x + f;
    if (next.equals(x)) return {std::move(next), it, true, bellman_method::jacobi};
    x = std::move(next);
  }
  return {std::move(x), max_iter, false, bellman_method::jacobi};
}

/// In-place sweeps in ascending row order: row i is recomputed from the rows
/// already updated in the current sweep. Same fixed point as Jacobi, usually
/// in fewer sweeps.
template <semiring_like R>
bellman_solution<R> solve_bellman_gauss_seidel(const matrix<R>& h, const matrix<R>& f,
                                               std::size_t max_iter) {
  detail::require_system(h, f, "bellman (gauss-seidel)");
  const R& ring = h.ring();
  const std::size_t n = h.rows();
  const auto zero = ring.zero();
  matrix<R> x = f;
  std::vector<element_t<R>> row(f.cols());
  for (std::size_t sweep = 1; sweep <= max_iter; ++sweep) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < f.cols(); ++c) row[c] = f(i, c);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& hik = h(i, k);
        if (ring.equal(hik, zero)) continue;
        for (std::size_t c = 0; c < f.cols(); ++c) row[c] = ring.add(row[c], ring.mul(hik, x(k, c)));
      }
      for (std::size_t c = 0; c < f.cols(); ++c) {
        if (!ring.equal(row[c], x(i, c))) {
          changed = true;
          x(i, c) = row[c];
        }
      }
    }
    if (!changed) return {std::move(x), sweep, true, bellman_method::gauss_seidel};
  }
  return {std::move(x), max_iter, false, bellman_method::gauss_seidel};
}

template <semiring_like R>
bellman_solution<R> solve_bellman(const matrix<R>& h, const matrix<R>& f, bellman_method method,
                                  std::size_t max_iter) {
  switch (method) {
  case bellman_method::jacobi: return solve_bellman_jacobi(h, f, max_iter);
  case bellman_method::gauss_seidel: return solve_bellman_gauss_seidel(h, f, max_iter);
  case bellman_method::star: break;
  }
  return solve_bellman_star(h, f);
}

/// Lower (or upper) bound matrix of an interval matrix.
template <semiring_like S>
matrix<S> lower_bounds(const matrix<interval_semiring<S>>& m) {
  matrix<S> out(m.ring().base(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).lo;
  return out;
}

template <semiring_like S>
matrix<S> upper_bounds(const matrix<interval_semiring<S>>& m) {
  matrix<S> out(m.ring().base(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).hi;
  return out;
}

/// Interval matrix with the given bound matrices.
template <semiring_like S>
matrix<interval_semiring<S>> interval_matrix(const interval_semiring<S>& ring,
                                             const matrix<S>& lower, const matrix<S>& upper) {
  if (lower.rows() != upper.rows() || lower.cols() != upper.cols()) {
    throw domain_error("interval matrix: bound shapes differ");
  }
  matrix<interval_semiring<S>> out(ring, lower.rows(), lower.cols());
  for (std::size_t i = 0; i < lower.rows(); ++i)
    for (std::size_t j = 0; j < lower.cols(); ++j) out(i, j) = ring.make(lower(i, j), upper(i, j));
  return out;
}

template <semiring_like S>
struct interval_bellman_solution {
  matrix<interval_semiring<S>> x;
  matrix<S> lower;
  matrix<S> upper;
  std::size_t iterations = 0;
  bool converged = true;
};

/**
 * Exact interval solution of X = H X + F over I(S): the lower bound system
 * and the upper bound system are solved separately over S, and the two
 * solutions become the bounds of the result. Every point system drawn from
 * inside the interval data has its solution inside the result.
 *
 * A diverging bound system throws divergence_error naming that bound.
 */
template <semiring_like S>
interval_bellman_solution<S> solve_bellman_interval(const matrix<interval_semiring<S>>& h,
                                                    const matrix<interval_semiring<S>>& f) {
  detail::require_system(h, f, "bellman (interval)");
  auto solve_bound = [](const matrix<S>& hb, const matrix<S>& fb, const char* which) {
    try {
      return solve_bellman_star(hb, fb);
    } catch (const divergence_error& e) {
      throw divergence_error(std::string(which) + " bound system: " + e.what(), e.row(), e.col());
    }
  };
  auto lo = solve_bound(lower_bounds(h), lower_bounds(f), "lower");
  auto hi = solve_bound(upper_bounds(h), upper_bounds(f), "upper");
  auto x = interval_matrix(h.ring(), lo.x, hi.x);
  const std::size_t iterations = std::max(lo.iterations, hi.iterations);
  return {std::move(x), std::move(lo.x), std::move(hi.x), iterations, true};
}

} // namespace idem
