#pragma once

#include "idem/concepts.hpp"
#include "idem/errors.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace idem {

/// A semiring-valued function on a finite set of labelled points. Points that
/// are not stored evaluate to the ring's zero, so functions over different
/// supports can always be combined.
template <semiring_like R>
class finite_function {
public:
  using ring_type = R;
  using value_type = element_t<R>;
  using storage = std::map<std::string, value_type, std::less<>>;

  explicit finite_function(R ring) : ring_(std::move(ring)) {}

  finite_function(R ring, storage values) : ring_(std::move(ring)), values_(std::move(values)) {
    if constexpr (requires { ring_.check(values_.begin()->second); }) {
      for (const auto& [point, v] : values_) ring_.check(v);
    }
  }

  const R& ring() const noexcept { return ring_; }
  const storage& values() const noexcept { return values_; }
  bool empty() const noexcept { return values_.empty(); }

  /// Stored points, in lexicographic order.
  std::vector<std::string> support() const {
    std::vector<std::string> out;
    out.reserve(values_.size());
    for (const auto& [point, v] : values_) out.push_back(point);
    return out;
  }

  bool contains_point(std::string_view point) const { return values_.find(point) != values_.end(); }

  value_type operator()(std::string_view point) const {
    const auto it = values_.find(point);
    return it == values_.end() ? ring_.zero() : it->second;
  }

  void set(std::string point, value_type value) {
    if constexpr (requires { ring_.check(value); }) ring_.check(value);
    values_.insert_or_assign(std::move(point), std::move(value));
  }

  /// Pointwise equality, treating absent points as zero.
  bool equals(const finite_function& other) const {
    for (const auto& [point, v] : values_)
      if (!ring_.equal(v, other(point))) return false;
    for (const auto& [point, v] : other.values_)
      if (!ring_.equal(v, (*this)(point))) return false;
    return true;
  }

  /// Like `equals`, using the ring's law tolerance.
  bool law_equals(const finite_function& other) const {
    for (const auto& [point, v] : values_)
      if (!ring_.law_equal(v, other(point))) return false;
    for (const auto& [point, v] : other.values_)
      if (!ring_.law_equal(v, (*this)(point))) return false;
    return true;
  }

private:
  R ring_;
  storage values_;
};

namespace detail {
template <semiring_like R>
void require_same_ring(const finite_function<R>& f, const finite_function<R>& g, const char* op) {
  if (!(f.ring() == g.ring())) {
    throw domain_error(std::string(op) + ": ring mismatch (" + std::string(f.ring().name()) +
                       " vs " + std::string(g.ring().name()) + ")");
  }
}
} // namespace detail

/// Sum of phi over its support; the ring's zero for an empty support. Under
/// max-plus this is the supremum, under min-plus the (conventional) infimum.
template <semiring_like R>
element_t<R> integrate(const finite_function<R>& phi) {
  const R& ring = phi.ring();
  element_t<R> total = ring.zero();
  for (const auto& [point, v] : phi.values()) total = ring.add(total, v);
  return total;
}

/// (f + g)(x) = f(x) + g(x) over the union of the supports.
template <semiring_like R>
finite_function<R> pointwise_add(const finite_function<R>& f, const finite_function<R>& g) {
  detail::require_same_ring(f, g, "pointwise add");
  finite_function<R> out = f;
  for (const auto& [point, v] : g.values()) out.set(point, f.ring().add(f(point), v));
  return out;
}

/// (f * g)(x) = f(x) * g(x) over the union of the supports.
template <semiring_like R>
finite_function<R> pointwise_mul(const finite_function<R>& f, const finite_function<R>& g) {
  detail::require_same_ring(f, g, "pointwise multiply");
  const R& ring = f.ring();
  finite_function<R> out(ring);
  for (const auto& [point, v] : f.values()) out.set(point, ring.mul(v, g(point)));
  for (const auto& [point, v] : g.values())
    if (!f.contains_point(point)) out.set(point, ring.mul(f(point), v));
  return out;
}

/// (c f)(x) = c * f(x)
template <semiring_like R>
finite_function<R> scalar_mul(const element_t<R>& c, const finite_function<R>& f) {
  const R& ring = f.ring();
  finite_function<R> out(ring);
  for (const auto& [point, v] : f.values()) out.set(point, ring.mul(c, v));
  return out;
}

/// Idempotent measure with density psi: the measure of a set of points is the
/// sum of psi over it.
template <semiring_like R>
class idempotent_measure {
public:
  explicit idempotent_measure(finite_function<R> density) : density_(std::move(density)) {}

  const finite_function<R>& density() const noexcept { return density_; }
  const R& ring() const noexcept { return density_.ring(); }

  /// Throws domain_error if `points` names something outside the density's
  /// support. The empty set has measure zero.
  template <class Points>
  element_t<R> measure_of(const Points& points) const {
    const R& ring = density_.ring();
    element_t<R> total = ring.zero();
    for (const auto& point : points) {
      if (!density_.contains_point(point)) {
        throw domain_error("measure: point '" + std::string(point) + "' is not in the support");
      }
      total = ring.add(total, density_(point));
    }
    return total;
  }

  element_t<R> measure_of(std::initializer_list<std::string_view> points) const {
    return measure_of<std::initializer_list<std::string_view>>(points);
  }

private:
  finite_function<R> density_;
};

/// Integral of phi against the measure with density psi: sum_x phi(x) * psi(x).
/// This is also the idempotent scalar product of phi and psi.
template <semiring_like R>
element_t<R> integrate_against(const finite_function<R>& phi, const idempotent_measure<R>& m) {
  const auto& psi = m.density();
  detail::require_same_ring(phi, psi, "integrate");
  const R& ring = phi.ring();
  element_t<R> total = ring.zero();
  for (const auto& [point, v] : phi.values()) {
    if (psi.contains_point(point)) total = ring.add(total, ring.mul(v, psi(point)));
  }
  return total;
}

template <semiring_like R>
std::string format(const finite_function<R>& f) {
  std::string out;
  for (const auto& [point, v] : f.values()) {
    if (!out.empty()) out += ' ';
    out += point + ":" + f.ring().format(v);
  }
  return out;
}

/// Reads "a:1 b:5 c:inf". The last ':' of each token separates the label
/// from the value; repeated labels are a parse error.
template <semiring_like R>
finite_function<R> parse_function(const R& ring, std::string_view text) {
  finite_function<R> f(ring);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto begin = text.find_first_not_of(" \t\r\n", pos);
    if (begin == std::string_view::npos) break;
    auto end = text.find_first_of(" \t\r\n", begin);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = text.substr(begin, end - begin);
    pos = end;
    const auto colon = token.rfind(':');
    if (colon == std::string_view::npos || colon == 0) {
      throw parse_error("expected point:value, got '" + std::string(token) + "'");
    }
    std::string point(token.substr(0, colon));
    if (f.contains_point(point)) throw parse_error("point '" + point + "' given twice");
    try {
      f.set(std::move(point), ring.parse(token.substr(colon + 1)));
    } catch (const domain_error& e) {
      throw parse_error(e.what());
    }
  }
  return f;
}

} // namespace idem
