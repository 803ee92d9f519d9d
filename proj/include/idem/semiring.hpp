#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace idem {

inline constexpr double inf = std::numeric_limits<double>::infinity();

/// Which subset of the extended real line a scalar semiring lives on.
enum class carrier_kind {
  reals_with_neg_inf,  // R u {-inf}
  reals_with_pos_inf,  // R u {+inf}
  extended_reals,      // R u {-inf, +inf}
  unit_segment,        // [0, 1]
  boolean,             // {0, 1}
  nonnegative_reals,   // [0, +inf)
};

std::string_view carrier_description(carrier_kind kind) noexcept;
bool carrier_contains(carrier_kind kind, double x) noexcept;

/**
 * A scalar semiring over a subset of the extended reals.
 *
 * The descriptor is a plain value: the operations are function pointers, so
 * descriptors are cheap to copy, usable in constant expressions and safe to
 * share between threads. Elements are `double`s; signed infinities stand for
 * the infinite carrier points.
 *
 * `add` and `mul` reject operands outside the carrier. `mul` short-circuits on
 * the zero so that the absorbing law holds even where the numeric operation
 * would produce NaN (e.g. -inf + inf).
 */
class semiring {
public:
  using value_type = double;
  using binary_op = double (*)(double, double);
  using inverse_op = std::optional<double> (*)(double);

  struct laws {
    bool idempotent = false;
    bool semifield = false;
    /// Relative tolerance the axiom harness uses for this ring. Zero means the
    /// laws are expected to hold bit for bit.
    double tolerance = 0.0;
  };

  constexpr semiring(std::string_view name, carrier_kind carrier, binary_op add, binary_op mul,
                     double zero, double one, laws flags, inverse_op inverse = nullptr) noexcept
      : name_(name), carrier_(carrier), add_(add), mul_(mul), inverse_(inverse), zero_(zero),
        one_(one), flags_(flags) {}

  constexpr std::string_view name() const noexcept { return name_; }
  constexpr carrier_kind carrier() const noexcept { return carrier_; }
  constexpr double zero() const noexcept { return zero_; }
  constexpr double one() const noexcept { return one_; }
  constexpr bool is_idempotent() const noexcept { return flags_.idempotent; }
  constexpr bool is_semifield() const noexcept { return flags_.semifield; }
  constexpr double law_tolerance() const noexcept { return flags_.tolerance; }

  bool in_carrier(double x) const noexcept { return carrier_contains(carrier_, x); }
  /// Throws domain_error when `x` is not a carrier point.
  double check(double x) const;

  double add(double a, double b) const;
  double mul(double a, double b) const;
  /// Multiplicative inverse of a nonzero element, if the ring provides one.
  std::optional<double> inverse(double a) const;

  /// Element equality: bitwise, except that -0.0 and +0.0 coincide.
  bool equal(double a, double b) const noexcept { return a == b; }
  /// Equality used when checking laws; honours `law_tolerance()`.
  bool law_equal(double a, double b) const noexcept;

  /// Standard order: a <= b iff a + b == b. Only defined for idempotent rings.
  bool leq(double a, double b) const;

  std::string format(double x) const;
  /// Parses a single token ("3.5", "inf", "-inf", or "_" for the zero) and
  /// checks it against the carrier.
  double parse(std::string_view token) const;

  friend bool operator==(const semiring& a, const semiring& b) noexcept {
    return a.name_ == b.name_;
  }

private:
  std::string_view name_;
  carrier_kind carrier_;
  binary_op add_;
  binary_op mul_;
  inverse_op inverse_;
  double zero_;
  double one_;
  laws flags_;
};

namespace detail {
constexpr double max_op(double a, double b) noexcept { return a < b ? b : a; }
constexpr double min_op(double a, double b) noexcept { return b < a ? b : a; }
constexpr double plus_op(double a, double b) noexcept { return a + b; }
constexpr double times_op(double a, double b) noexcept { return a * b; }
std::optional<double> negate_inverse(double a) noexcept;
std::optional<double> boolean_inverse(double a) noexcept;
std::optional<double> reciprocal_inverse(double a) noexcept;
} // namespace detail

/// (R u {-inf}, max, +), zero -inf, one 0.
inline constexpr semiring max_plus{"max-plus", carrier_kind::reals_with_neg_inf,
                                   detail::max_op, detail::plus_op, -inf, 0.0,
                                   {.idempotent = true, .semifield = true},
                                   detail::negate_inverse};

/// (R u {+inf}, min, +), zero +inf, one 0.
inline constexpr semiring min_plus{"min-plus", carrier_kind::reals_with_pos_inf,
                                   detail::min_op, detail::plus_op, inf, 0.0,
                                   {.idempotent = true, .semifield = true},
                                   detail::negate_inverse};

/// ({0, 1}, or, and).
inline constexpr semiring boolean{"boolean", carrier_kind::boolean, detail::max_op,
                                  detail::min_op, 0.0, 1.0,
                                  {.idempotent = true, .semifield = true},
                                  detail::boolean_inverse};

/// ([0, 1], max, min). Idempotent, but not a semifield.
inline constexpr semiring fuzzy{"fuzzy", carrier_kind::unit_segment, detail::max_op,
                                detail::min_op, 0.0, 1.0, {.idempotent = true}};

/// (R u {-inf, +inf}, max, min), zero -inf, one +inf.
inline constexpr semiring max_min{"max-min", carrier_kind::extended_reals, detail::max_op,
                                  detail::min_op, -inf, inf, {.idempotent = true}};

/// Nonnegative reals with ordinary + and x. Not idempotent; this is the ring
/// the log-scale change of variables deforms into max-plus.
inline constexpr semiring arith{"arith", carrier_kind::nonnegative_reals, detail::plus_op,
                                detail::times_op, 0.0, 1.0,
                                {.semifield = true, .tolerance = 1e-9},
                                detail::reciprocal_inverse};

/// Every built-in descriptor, in catalogue order.
std::span<const semiring* const> builtin_semirings() noexcept;
/// The built-in descriptors with idempotent addition.
std::span<const semiring* const> idempotent_semirings() noexcept;

/// Case-insensitive lookup of a built-in ("max-plus", "MIN-PLUS", ...).
/// Throws domain_error for unknown names.
const semiring& semiring_by_name(std::string_view name);

/// Positive scale of the logarithmic change of variables x -> h ln x.
class dequantization_scale {
public:
  explicit dequantization_scale(double h);
  double value() const noexcept { return h_; }

private:
  double h_;
};

/// h ln(e^{u/h} + e^{v/h}), evaluated as max(u, v) + h ln(1 + e^{-|u-v|/h}).
double dequantized_add(double u, double v, dequantization_scale h);

/// The correction term h ln(1 + e^{-|u-v|/h}) by which dequantized_add exceeds
/// max(u, v). Computed in extended precision so that it stays representable
/// when it is far below the ulp of max(u, v).
long double dequantized_excess(double u, double v, dequantization_scale h);

/// x -> h ln x, with 0 -> -inf. Negative x is a domain error.
double dequantize(double x, dequantization_scale h);

} // namespace idem
