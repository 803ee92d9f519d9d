#pragma once

#include "idem/analysis.hpp"
#include "idem/interval.hpp"
#include "idem/semiring.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace idem {

using universe = std::set<std::string, std::less<>>;

/// A generalized fuzzy set: membership grades in an idempotent semiring over
/// an explicit finite universe. Grades default to the ring's zero.
///
/// With the fuzzy segment ([0,1], max, min) these are Zadeh fuzzy sets; with
/// grades restricted to {zero, one} they are ordinary subsets; with I(S) they
/// are interval-valued fuzzy sets.
template <semiring_like R>
class fuzzy_set {
public:
  using ring_type = R;
  using grade_type = element_t<R>;

  fuzzy_set(idem::universe points, finite_function<R> membership)
      : universe_(std::move(points)), membership_(std::move(membership)) {
    if (!membership_.ring().is_idempotent()) {
      throw unsupported_operation("fuzzy sets need an idempotent semiring, got " +
                                  std::string(membership_.ring().name()));
    }
    for (const auto& [point, grade] : membership_.values()) {
      if (!universe_.contains(point)) {
        throw domain_error("fuzzy set: point '" + point + "' is outside the universe");
      }
    }
  }

  /// Universe = the points named in `membership`.
  explicit fuzzy_set(finite_function<R> membership)
      : fuzzy_set(points_of(membership), std::move(membership)) {}

  /// Every point of the universe with grade one.
  static fuzzy_set full(R ring, idem::universe points) {
    finite_function<R> m(ring);
    for (const auto& p : points) m.set(p, ring.one());
    return fuzzy_set(std::move(points), std::move(m));
  }

  static fuzzy_set empty(R ring, idem::universe points) {
    return fuzzy_set(std::move(points), finite_function<R>(std::move(ring)));
  }

  const idem::universe& universe() const noexcept { return universe_; }
  const finite_function<R>& membership() const noexcept { return membership_; }
  const R& ring() const noexcept { return membership_.ring(); }
  grade_type grade(std::string_view point) const { return membership_(point); }

  bool equals(const fuzzy_set& other) const {
    return universe_ == other.universe_ && membership_.equals(other.membership_);
  }

private:
  static idem::universe points_of(const finite_function<R>& f) {
    idem::universe u;
    for (const auto& [point, grade] : f.values()) u.insert(point);
    return u;
  }

  idem::universe universe_;
  finite_function<R> membership_;
};

namespace detail {
template <semiring_like R>
void require_compatible(const fuzzy_set<R>& a, const fuzzy_set<R>& b, const char* op) {
  if (!(a.ring() == b.ring())) throw domain_error(std::string(op) + ": ring mismatch");
  if (a.universe() != b.universe()) throw domain_error(std::string(op) + ": universe mismatch");
}
} // namespace detail

/// Pointwise sum of grades (max for Zadeh sets, set union for crisp sets).
template <semiring_like R>
fuzzy_set<R> fuzzy_union(const fuzzy_set<R>& a, const fuzzy_set<R>& b) {
  detail::require_compatible(a, b, "union");
  return fuzzy_set<R>(a.universe(), pointwise_add(a.membership(), b.membership()));
}

/// Pointwise product of grades (min for Zadeh sets, set intersection for crisp sets).
template <semiring_like R>
fuzzy_set<R> fuzzy_intersection(const fuzzy_set<R>& a, const fuzzy_set<R>& b) {
  detail::require_compatible(a, b, "intersection");
  return fuzzy_set<R>(a.universe(), pointwise_mul(a.membership(), b.membership()));
}

/// True iff every grade is the ring's zero or one.
template <semiring_like R>
bool is_crisp(const fuzzy_set<R>& a) {
  const R& ring = a.ring();
  for (const auto& [point, grade] : a.membership().values()) {
    if (!ring.equal(grade, ring.zero()) && !ring.equal(grade, ring.one())) return false;
  }
  return true;
}

/// Interval-valued fuzzy set with grade [lower(w), upper(w)] at each point w.
/// Throws domain_error naming the first point where lower is not below upper.
template <semiring_like R>
fuzzy_set<interval_semiring<R>> to_interval_fuzzy(const fuzzy_set<R>& lower,
                                                  const fuzzy_set<R>& upper) {
  detail::require_compatible(lower, upper, "interval fuzzy set");
  const R& ring = lower.ring();
  const interval_semiring<R> iring(ring);
  finite_function<interval_semiring<R>> m(iring);
  for (const auto& point : lower.universe()) {
    const auto lo = lower.grade(point);
    const auto hi = upper.grade(point);
    if (!ring.leq(lo, hi)) {
      throw domain_error("interval fuzzy set: lower grade " + ring.format(lo) +
                         " exceeds upper grade " + ring.format(hi) + " at '" + point + "'");
    }
    if (!(ring.equal(lo, ring.zero()) && ring.equal(hi, ring.zero()))) m.set(point, {lo, hi});
  }
  return fuzzy_set<interval_semiring<R>>(lower.universe(), std::move(m));
}

/// Possibility of A under the distribution psi: sum over w of A(w) * psi(w).
/// For a crisp A over the fuzzy segment this is the largest psi on A.
template <semiring_like R>
element_t<R> possibility(const fuzzy_set<R>& a, const idempotent_measure<R>& dist) {
  if (!(a.ring() == dist.ring())) throw domain_error("possibility: ring mismatch");
  for (const auto& [point, grade] : dist.density().values()) {
    if (!a.universe().contains(point)) {
      throw domain_error("possibility: distribution point '" + point +
                         "' is outside the universe");
    }
  }
  return integrate_against(a.membership(), dist);
}

/// 1 - grade, for Zadeh fuzzy sets only. This is not part of the semiring
/// structure and is rejected for every ring other than the fuzzy segment.
fuzzy_set<semiring> complement(const fuzzy_set<semiring>& a);

/**
 * F(S) over a fixed universe: generalized fuzzy sets with pointwise sum and
 * product, packaged as a semiring so that generic code (the axiom harness,
 * matrices) can use it.
 */
template <semiring_like R>
class function_semiring {
public:
  using value_type = finite_function<R>;

  function_semiring(R base, idem::universe points)
      : base_(std::move(base)), universe_(std::move(points)) {
    name_ = "F(" + std::string(base_.name()) + ")";
  }

  const R& base() const noexcept { return base_; }
  const idem::universe& universe() const noexcept { return universe_; }
  std::string_view name() const noexcept { return name_; }

  value_type zero() const { return value_type(base_); }
  value_type one() const {
    value_type f(base_);
    for (const auto& p : universe_) f.set(p, base_.one());
    return f;
  }
  value_type add(const value_type& a, const value_type& b) const { return pointwise_add(a, b); }
  value_type mul(const value_type& a, const value_type& b) const { return pointwise_mul(a, b); }
  bool equal(const value_type& a, const value_type& b) const { return a.equals(b); }
  bool law_equal(const value_type& a, const value_type& b) const { return a.law_equals(b); }
  bool is_idempotent() const { return base_.is_idempotent(); }
  bool is_semifield() const noexcept { return false; }
  std::optional<value_type> inverse(const value_type&) const { return std::nullopt; }
  std::string format(const value_type& f) const { return "{" + idem::format(f) + "}"; }

  friend bool operator==(const function_semiring& a, const function_semiring& b) {
    return a.base_ == b.base_ && a.universe_ == b.universe_;
  }

private:
  R base_;
  idem::universe universe_;
  std::string name_;
};

} // namespace idem
