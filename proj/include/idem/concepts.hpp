#pragma once

#include <concepts>
#include <optional>
#include <string>

namespace idem {

/// What the generic algorithms need from a semiring descriptor. The scalar
/// `semiring`, `interval_semiring<S>` and `function_semiring<S>` all model it,
/// so matrices, closures and the axiom harness work over any of them.
template <class R>
concept semiring_like = requires(const R& r, const typename R::value_type& a) {
  typename R::value_type;
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.equal(a, a) } -> std::same_as<bool>;
  { r.law_equal(a, a) } -> std::same_as<bool>;
  { r.is_idempotent() } -> std::same_as<bool>;
  { r.is_semifield() } -> std::same_as<bool>;
  { r.inverse(a) } -> std::same_as<std::optional<typename R::value_type>>;
  { r.format(a) } -> std::convertible_to<std::string>;
  { std::string(r.name()) };
};

template <semiring_like R>
using element_t = typename R::value_type;

} // namespace idem
