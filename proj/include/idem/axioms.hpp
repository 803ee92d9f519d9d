#pragma once

#include "idem/concepts.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace idem {

enum class axiom_status { passed, failed, not_claimed };

std::string_view to_string(axiom_status status) noexcept;

struct axiom_result {
  std::string name;
  axiom_status status = axiom_status::passed;
  std::size_t trials = 0;
  /// Empty unless status == failed.
  std::string counterexample;
};

struct axiom_report {
  std::string ring;
  std::vector<axiom_result> results;

  /// True when nothing failed; unclaimed laws do not count as failures.
  bool all_passed() const noexcept {
    return std::none_of(results.begin(), results.end(),
                        [](const axiom_result& r) { return r.status == axiom_status::failed; });
  }
  const axiom_result* find(std::string_view name) const noexcept {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }
};

namespace detail {

template <semiring_like R>
class law_checker {
public:
  law_checker(const R& ring, std::string name) : ring_(ring) { result_.name = std::move(name); }

  template <class... Named>
  void expect(const element_t<R>& lhs, const element_t<R>& rhs, const Named&... operands) {
    ++result_.trials;
    if (result_.status == axiom_status::failed || ring_.law_equal(lhs, rhs)) return;
    result_.status = axiom_status::failed;
    std::string text;
    ((text += std::string(operands.first) + "=" + ring_.format(operands.second) + " "), ...);
    text += "lhs=" + ring_.format(lhs) + " rhs=" + ring_.format(rhs);
    result_.counterexample = std::move(text);
  }

  void fail(std::string counterexample) {
    ++result_.trials;
    if (result_.status == axiom_status::failed) return;
    result_.status = axiom_status::failed;
    result_.counterexample = std::move(counterexample);
  }

  axiom_result take() { return std::move(result_); }

private:
  const R& ring_;
  axiom_result result_;
};

} // namespace detail

/**
 * Samples `trials` random triples with `sample(rng)` and checks the semiring
 * laws on each: both associativities, commutativity of addition, two-sided
 * distributivity, the neutral and absorbing laws, and (when the descriptor
 * claims them) idempotency and invertibility of nonzero elements.
 *
 * Failures are reported with the first counterexample found; the function
 * itself never throws on a broken law.
 */
template <semiring_like R, class Sampler>
axiom_report check_axioms(const R& ring, Sampler&& sample, std::size_t trials,
                          std::uint64_t seed = 0x5eed) {
  using detail::law_checker;
  using named = std::pair<const char*, element_t<R>>;

  std::mt19937_64 rng(seed);
  law_checker<R> add_assoc(ring, "add-associative");
  law_checker<R> mul_assoc(ring, "mul-associative");
  law_checker<R> add_comm(ring, "add-commutative");
  law_checker<R> left_dist(ring, "left-distributive");
  law_checker<R> right_dist(ring, "right-distributive");
  law_checker<R> add_ident(ring, "zero-neutral");
  law_checker<R> mul_ident(ring, "one-neutral");
  law_checker<R> absorb(ring, "zero-absorbing");
  law_checker<R> distinct(ring, "zero-not-one");
  law_checker<R> idem(ring, "idempotent");
  law_checker<R> invert(ring, "invertible");

  const auto zero = ring.zero();
  const auto one = ring.one();
  if (ring.equal(zero, one)) distinct.fail("zero == one");
  else distinct.expect(zero, zero);

  for (std::size_t t = 0; t < trials; ++t) {
    const element_t<R> a = sample(rng);
    const element_t<R> b = sample(rng);
    const element_t<R> c = sample(rng);
    const named na{"a", a}, nb{"b", b}, nc{"c", c};

    add_assoc.expect(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)), na, nb, nc);
    mul_assoc.expect(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)), na, nb, nc);
    add_comm.expect(ring.add(a, b), ring.add(b, a), na, nb);
    left_dist.expect(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c)), na,
                     nb, nc);
    right_dist.expect(ring.mul(ring.add(a, b), c), ring.add(ring.mul(a, c), ring.mul(b, c)), na,
                      nb, nc);
    add_ident.expect(ring.add(zero, a), a, na);
    add_ident.expect(ring.add(a, zero), a, na);
    mul_ident.expect(ring.mul(one, a), a, na);
    mul_ident.expect(ring.mul(a, one), a, na);
    absorb.expect(ring.mul(zero, a), zero, na);
    absorb.expect(ring.mul(a, zero), zero, na);

    if (ring.is_idempotent()) idem.expect(ring.add(a, a), a, na);

    if (ring.is_semifield() && !ring.equal(a, zero)) {
      if (auto inv = ring.inverse(a)) {
        invert.expect(ring.mul(a, *inv), one, na);
        invert.expect(ring.mul(*inv, a), one, na);
      } else {
        invert.fail("a=" + std::string(ring.format(a)) + " has no inverse");
      }
    }
  }

  axiom_report report;
  report.ring = std::string(ring.name());
  for (auto* checker : {&add_assoc, &mul_assoc, &add_comm, &left_dist, &right_dist, &add_ident,
                        &mul_ident, &absorb, &distinct}) {
    report.results.push_back(checker->take());
  }
  auto claimed = [&](law_checker<R>& checker, bool is_claimed) {
    axiom_result r = checker.take();
    if (!is_claimed) {
      r.status = axiom_status::not_claimed;
      r.trials = 0;
    }
    report.results.push_back(std::move(r));
  };
  claimed(idem, ring.is_idempotent());
  claimed(invert, ring.is_semifield());
  return report;
}

} // namespace idem
