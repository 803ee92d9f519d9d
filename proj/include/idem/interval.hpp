#pragma once

#include "idem/concepts.hpp"
#include "idem/errors.hpp"

#include <cassert>
#include <optional>
#include <string>
#include <string_view>

namespace idem {

/// Closed interval {x : lo <= x <= hi} in the standard order of some
/// idempotent semiring. Under min-plus the standard order reverses the usual
/// one, so [5, 2] is a valid min-plus interval and [2, 5] is not.
template <class T>
struct interval {
  T lo;
  T hi;

  friend bool operator==(const interval&, const interval&) = default;
};

/// The weak interval extension I(S): intervals of an idempotent semiring with
/// componentwise addition and multiplication. Itself an idempotent semiring.
template <semiring_like Base>
class interval_semiring {
public:
  using base_type = Base;
  using bound_type = element_t<Base>;
  using value_type = interval<bound_type>;

  explicit interval_semiring(Base base) : base_(std::move(base)) {
    if (!base_.is_idempotent()) {
      throw unsupported_operation("interval extension needs an idempotent base, got " +
                                  std::string(base_.name()));
    }
    name_ = "I(" + std::string(base_.name()) + ")";
  }

  const Base& base() const noexcept { return base_; }
  std::string_view name() const noexcept { return name_; }

  /// Builds [lo, hi]; throws domain_error unless lo <= hi in the standard order.
  value_type make(const bound_type& lo, const bound_type& hi) const {
    if constexpr (requires { base_.check(lo); }) {
      base_.check(lo);
      base_.check(hi);
    }
    if (!base_.leq(lo, hi)) {
      throw domain_error("invalid " + std::string(base_.name()) + " interval [" +
                         base_.format(lo) + ", " + base_.format(hi) +
                         "]: lower bound is not below upper bound in the standard order");
    }
    return {lo, hi};
  }

  /// a -> [a, a]
  value_type embed(const bound_type& a) const { return {a, a}; }

  value_type zero() const { return embed(base_.zero()); }
  value_type one() const { return embed(base_.one()); }

  value_type add(const value_type& x, const value_type& y) const {
    value_type r{base_.add(x.lo, y.lo), base_.add(x.hi, y.hi)};
    assert(valid(r));
    return r;
  }

  value_type mul(const value_type& x, const value_type& y) const {
    value_type r{base_.mul(x.lo, y.lo), base_.mul(x.hi, y.hi)};
    assert(valid(r));
    return r;
  }

  bool valid(const value_type& x) const { return base_.leq(x.lo, x.hi); }

  bool contains(const value_type& x, const bound_type& e) const {
    return base_.leq(x.lo, e) && base_.leq(e, x.hi);
  }

  bool is_degenerate(const value_type& x) const { return base_.equal(x.lo, x.hi); }

  bool equal(const value_type& x, const value_type& y) const {
    return base_.equal(x.lo, y.lo) && base_.equal(x.hi, y.hi);
  }
  bool law_equal(const value_type& x, const value_type& y) const {
    return base_.law_equal(x.lo, y.lo) && base_.law_equal(x.hi, y.hi);
  }
  bool leq(const value_type& x, const value_type& y) const { return equal(add(x, y), y); }

  bool is_idempotent() const noexcept { return true; }
  bool is_semifield() const noexcept { return false; }
  std::optional<value_type> inverse(const value_type&) const { return std::nullopt; }

  std::string format(const value_type& x) const {
    return "[" + base_.format(x.lo) + ", " + base_.format(x.hi) + "]";
  }

  /// Accepts "[lo, hi]", "[lo,hi]", "lo,hi", or a single bound for a
  /// degenerate interval.
  value_type parse(std::string_view text) const {
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '[') {
      if (body.back() != ']') throw parse_error("unterminated interval '" + std::string(text) + "'");
      body = trim(body.substr(1, body.size() - 2));
    }
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) return embed(base_.parse(body));
    return make(base_.parse(trim(body.substr(0, comma))), base_.parse(trim(body.substr(comma + 1))));
  }

  friend bool operator==(const interval_semiring& a, const interval_semiring& b) {
    return a.base_ == b.base_;
  }

private:
  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  }

  Base base_;
  std::string name_;
};

} // namespace idem
