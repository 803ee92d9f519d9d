#include "idem/bellman.hpp"
#include "idem/errors.hpp"
#include "idem/sampling.hpp"
#include "idem/text.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace idem;
using mat = matrix<semiring>;
using imat = matrix<interval_semiring<semiring>>;

namespace {

mat from_edges(const semiring& ring, std::size_t n, const std::vector<oracle::edge>& edges) {
  mat h(ring, n, n);
  for (const auto& e : edges) h(e.from, e.to) = ring.add(h(e.from, e.to), e.weight);
  return h;
}

oracle::weight_table table_of(const mat& h) {
  oracle::weight_table w(h.rows(), std::vector<std::optional<double>>(h.cols()));
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != h.ring().zero()) w[i][j] = h(i, j);
  return w;
}

/// Walk sums of length < n using the ring's own operations on the scalar level.
mat brute_force_star(const mat& h) {
  const semiring& ring = h.ring();
  const auto sums = oracle::walk_sums(
      table_of(h), h.rows() == 0 ? 0 : h.rows() - 1,
      [&](double a, double b) { return ring.add(a, b); },
      [&](double a, double b) { return ring.mul(a, b); }, ring.zero(), ring.one());
  mat out(ring, h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = sums[i][j];
  return out;
}

mat random_rhs(const semiring& ring, std::size_t n, std::size_t m, rng_type& rng) {
  auto sample = scalar_sampler(ring);
  mat f(ring, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) f(i, j) = sample(rng);
  return f;
}

/// Edge weights that keep the closure finite for each ring.
std::function<double(rng_type&)> safe_weights(const semiring& ring) {
  if (ring == min_plus) {
    return [](rng_type& rng) { return double(std::uniform_int_distribution<int>(0, 9)(rng)); };
  }
  if (ring == max_plus) {
    return [](rng_type& rng) { return -double(std::uniform_int_distribution<int>(0, 9)(rng)); };
  }
  auto sample = scalar_sampler(ring);
  return [sample, ring](rng_type& rng) {
    double w = sample(rng);
    while (w == ring.zero()) w = sample(rng);
    return w;
  };
}

} // namespace

TEST_CASE("closure of a two-node min-plus graph") {
  const mat h(min_plus, 2, 2, {inf, 1, 2, inf});
  const mat star = kleene_star(h);
  CHECK(star == brute_force_star(h));
  CHECK(star == mat(min_plus, 2, 2, {0, 1, 2, 0}));
}

TEST_CASE("closure of the zero matrix is the identity") {
  for (const semiring* s : idempotent_semirings()) {
    for (std::size_t n : {1u, 3u, 6u}) CHECK(kleene_star(mat(*s, n, n)) == mat::identity(*s, n));
  }
  CHECK(kleene_star(mat(min_plus, 0, 0)).rows() == 0);
}

TEST_CASE("negative cycle makes the closure diverge") {
  const mat h(min_plus, 2, 2, {inf, 1, -2, inf});
  // The walk sums keep dropping as longer walks are admitted.
  double previous = inf;
  for (std::size_t len = 1; len <= 8; ++len) {
    const auto sums = oracle::walk_sums(
        table_of(h), len, [](double a, double b) { return std::min(a, b); },
        [](double a, double b) { return a + b; }, inf, 0.0);
    if (len % 2 == 0) {
      CHECK(sums[0][0] < previous);
      previous = sums[0][0];
    }
  }
  CHECK_THROWS_AS(kleene_star(h), divergence_error);
  try {
    kleene_star(h);
  } catch (const divergence_error& e) {
    CHECK(e.row() < 2);
    CHECK(e.col() < 2);
    CHECK(std::string(e.what()).find("does not stabilize") != std::string::npos);
  }
  CHECK_THROWS_AS(kleene_star(mat(min_plus, 1, 1, {-1})), divergence_error);
  CHECK(kleene_star(mat(min_plus, 1, 1, {2})) == mat(min_plus, 1, 1, {0}));
  // Positive cycles are the max-plus analogue.
  CHECK_THROWS_AS(kleene_star(mat(max_plus, 2, 2, {-inf, 1, 1, -inf})), divergence_error);
}

TEST_CASE("closure needs a square matrix over an idempotent ring") {
  CHECK_THROWS_AS(kleene_star(mat(min_plus, 2, 3)), domain_error);
  CHECK_THROWS_AS(kleene_star(mat(arith, 2, 2)), unsupported_operation);
}

TEST_CASE("closure equals brute-force path sums and is a fixed point") {
  rng_type rng(99);
  for (const semiring* s : idempotent_semirings()) {
    CAPTURE(s->name());
    auto weights = safe_weights(*s);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
      const mat h = from_edges(*s, n, oracle::random_digraph(rng, n, 0.4, weights));
      const mat star = kleene_star(h);
      CHECK(star == brute_force_star(h));
      CHECK(star == mat::identity(*s, n) + h * star);
    }
  }
}

TEST_CASE("Jacobi iteration") {
  const mat h(min_plus, 2, 2, {inf, 1, 2, inf});
  const mat f(min_plus, 2, 1, {0, inf});
  const auto sol = solve_bellman_jacobi(h, f, 10);
  REQUIRE(sol.converged);
  // x_i = shortest walk from i to node 0
  const auto sums = oracle::walk_sums(
      table_of(h), 1, [](double a, double b) { return std::min(a, b); },
      [](double a, double b) { return a + b; }, inf, 0.0);
  CHECK(sol.x == mat(min_plus, 2, 1, {sums[0][0], sums[1][0]}));
  CHECK(sol.x == mat(min_plus, 2, 1, {0, 2}));
  CHECK(sol.method == bellman_method::jacobi);

  rng_type rng(1);
  const auto trivial = solve_bellman_jacobi(mat(min_plus, 3, 3), random_rhs(min_plus, 3, 2, rng), 5);
  CHECK(trivial.converged);
  CHECK(trivial.iterations == 1);
}

TEST_CASE("boolean Bellman solution is reachability") {
  rng_type rng(5);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const auto edges = oracle::random_digraph(rng, n, 0.3, [](rng_type&) { return 1.0; });
    const mat h = from_edges(boolean, n, edges);
    const auto sol = solve_bellman_jacobi(h.transposed(), mat::identity(boolean, n), n);
    REQUIRE(sol.converged);
    // X = H^T X + I gives X(j, i) = [i reaches j].
    for (std::size_t i = 0; i < n; ++i) {
      const auto seen = oracle::reachable(n, edges, i);
      for (std::size_t j = 0; j < n; ++j) CHECK((sol.x(j, i) == 1.0) == seen.contains(j));
    }
    CHECK(solve_bellman_jacobi(h, mat::identity(boolean, n), n).x == kleene_star(h));
  }
}

TEST_CASE("Gauss-Seidel sweeps") {
  const mat h(min_plus, 2, 2, {inf, 1, 2, inf});
  const mat f(min_plus, 2, 1, {0, inf});
  const auto jacobi = solve_bellman_jacobi(h, f, 10);
  const auto gs = solve_bellman_gauss_seidel(h, f, 10);
  REQUIRE(gs.converged);
  CHECK(gs.x == mat(min_plus, 2, 1, {0, 2}));
  CHECK(gs.iterations <= jacobi.iterations);
  CHECK(gs.method == bellman_method::gauss_seidel);

  rng_type rng(3);
  const auto zero = solve_bellman_gauss_seidel(mat(max_plus, 4, 4), random_rhs(max_plus, 4, 2, rng), 3);
  CHECK(zero.converged);
  CHECK(zero.iterations == 1);
}

TEST_CASE("Gauss-Seidel needs no more sweeps than Jacobi on random DAGs") {
  rng_type rng(2024);
  int not_more = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    // Random weights on a random topological order.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    mat h(min_plus, n, n);
    std::bernoulli_distribution present(0.4);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (present(rng)) h(order[a], order[b]) = std::uniform_int_distribution<int>(0, 9)(rng);
    const mat f = random_rhs(min_plus, n, 1, rng);
    const auto j = solve_bellman_jacobi(h, f, n);
    const auto g = solve_bellman_gauss_seidel(h, f, n);
    REQUIRE(j.converged);
    REQUIRE(g.converged);
    CHECK(j.x == g.x);
    if (g.iterations <= j.iterations) ++not_more;
  }
  CHECK(not_more >= 90);
}

TEST_CASE("the three solvers agree") {
  rng_type rng(77);
  for (const semiring* s : idempotent_semirings()) {
    CAPTURE(s->name());
    auto weights = safe_weights(*s);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
      const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      const mat h = from_edges(*s, n, oracle::random_digraph(rng, n, 0.4, weights));
      const mat f = random_rhs(*s, n, m, rng);
      const auto star = solve_bellman_star(h, f);
      const auto jacobi = solve_bellman_jacobi(h, f, n);
      const auto gs = solve_bellman_gauss_seidel(h, f, n);
      REQUIRE(jacobi.converged);
      REQUIRE(gs.converged);
      CHECK(star.x == kleene_star(h) * f);
      CHECK(jacobi.x == star.x);
      CHECK(gs.x == star.x);
      CHECK(h * star.x + f == star.x);
    }
  }
}

TEST_CASE("iteration cap reports non-convergence") {
  const mat h(min_plus, 2, 2, {inf, 1, -2, inf});
  const mat f(min_plus, 2, 1, {0, inf});
  const auto j = solve_bellman_jacobi(h, f, 2);
  CHECK_FALSE(j.converged);
  CHECK(j.iterations == 2);
  CHECK_FALSE(solve_bellman_gauss_seidel(h, f, 50).converged);
  CHECK_THROWS_AS(solve_bellman_star(h, f), divergence_error);
  CHECK_THROWS_AS(solve_bellman_jacobi(h, mat(min_plus, 3, 1), 2), domain_error);
  CHECK_THROWS_AS(solve_bellman_jacobi(h, mat(max_plus, 2, 1), 2), domain_error);
}

TEST_CASE("the closure solution is the least solution") {
  rng_type rng(31);
  const std::vector<double> steps{0.5, 1, 2, 3, 7, 100};
  int other_solutions = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const mat h = from_edges(min_plus, n, oracle::random_digraph(rng, n, 0.5, safe_weights(min_plus)));
    const mat f = random_rhs(min_plus, n, 1, rng);
    const mat x = solve_bellman_star(h, f).x;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> candidates{inf, -100};
      for (double d : steps) {
        candidates.push_back(x(i, 0) + d);
        candidates.push_back(x(i, 0) == inf ? 50 - d : x(i, 0) - d);
      }
      for (double v : candidates) {
        if (!min_plus.in_carrier(v) || v == x(i, 0)) continue;
        mat y = x;
        y(i, 0) = v;
        if (!(h * y + f == y)) continue;
        // Any other solution lies above X in the standard order, so only
        // numerically smaller entries can survive (zero-weight cycles allow them).
        ++other_solutions;
        CHECK(min_plus.leq(x(i, 0), v));
        CHECK(v < x(i, 0));
      }
    }
  }
  CHECK(other_solutions > 0);
}

TEST_CASE("interval Bellman solutions") {
  using iring = interval_semiring<semiring>;

  SUBCASE("degenerate data gives the point solution") {
    rng_type rng(6);
    const iring r(min_plus);
    const mat h = from_edges(min_plus, 4, oracle::random_digraph(rng, 4, 0.5, safe_weights(min_plus)));
    const mat f = random_rhs(min_plus, 4, 2, rng);
    const auto sol = solve_bellman_interval(interval_matrix(r, h, h), interval_matrix(r, f, f));
    const mat point = solve_bellman_star(h, f).x;
    CHECK(sol.lower == point);
    CHECK(sol.upper == point);
    for (const auto& e : sol.x.entries()) CHECK(r.is_degenerate(e));
  }

  SUBCASE("two-node min-plus system") {
    const iring r(min_plus);
    // Edge 0 -> 1 has weight in [3, 1] (3 is the standard-order lower bound).
    const imat h = parse_matrix(r, "inf [3, 1]\n2 inf\n");
    const imat f = parse_matrix(r, "0\ninf\n");
    const auto sol = solve_bellman_interval(h, f);
    // Bound systems solved by hand: x0 = min(0, w + x1), x1 = 2 + x0.
    CHECK(sol.lower == mat(min_plus, 2, 1, {0, 2}));
    CHECK(sol.upper == mat(min_plus, 2, 1, {0, 2}));
    CHECK(sol.lower == solve_bellman_star(lower_bounds(h), lower_bounds(f)).x);
    CHECK(sol.upper == solve_bellman_star(upper_bounds(h), upper_bounds(f)).x);
  }

  SUBCASE("bounds that differ") {
    const iring r(min_plus);
    const imat h = parse_matrix(r, "inf [5, 1]\n[4, 2] inf\n");
    const imat f = parse_matrix(r, "inf\n0\n");
    const auto sol = solve_bellman_interval(h, f);
    CHECK(sol.x(0, 0) == interval<double>{5, 1});
    CHECK(sol.x(1, 0) == interval<double>{0, 0});
  }

  SUBCASE("sampled point systems land inside the interval solution") {
    rng_type rng(12);
    for (const semiring* s : idempotent_semirings()) {
      CAPTURE(s->name());
      const iring r(*s);
      auto weights = safe_weights(*s);
      const std::size_t n = 4;
      mat h_lo = from_edges(*s, n, oracle::random_digraph(rng, n, 0.5, weights));
      mat h_hi = h_lo;
      for (auto i = 0u; i < n; ++i)
        for (auto j = 0u; j < n; ++j) {
          const double a = h_lo(i, j), b = weights(rng);
          if (a == s->zero()) continue;
          h_lo(i, j) = s->leq(a, b) ? a : b;
          h_hi(i, j) = s->leq(a, b) ? b : a;
        }
      const mat f = random_rhs(*s, n, 1, rng);
      const auto sol = solve_bellman_interval(interval_matrix(r, h_lo, h_hi), interval_matrix(r, f, f));
      for (int t = 0; t < 100; ++t) {
        mat h = h_lo;
        for (auto i = 0u; i < n; ++i)
          for (auto j = 0u; j < n; ++j)
            if (std::bernoulli_distribution(0.5)(rng)) h(i, j) = h_hi(i, j);
        const mat x = solve_bellman_star(h, f).x;
        for (auto i = 0u; i < n; ++i) CHECK(r.contains(sol.x(i, 0), x(i, 0)));
      }
    }
  }

  SUBCASE("a diverging bound is named") {
    const iring r(min_plus);
    const imat h = parse_matrix(r, "inf [1, -5]\n2 inf\n");
    const imat f = parse_matrix(r, "0\ninf\n");
    try {
      solve_bellman_interval(h, f);
      FAIL("expected divergence");
    } catch (const divergence_error& e) {
      CHECK(std::string(e.what()).find("upper bound") != std::string::npos);
    }
  }
}
