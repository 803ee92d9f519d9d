#include "idem/semiring.hpp"

#include "idem/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace idem {

std::string_view carrier_description(carrier_kind kind) noexcept {
  switch (kind) {
  case carrier_kind::reals_with_neg_inf: return "R u {-inf}";
  case carrier_kind::reals_with_pos_inf: return "R u {+inf}";
  case carrier_kind::extended_reals: return "R u {-inf, +inf}";
  case carrier_kind::unit_segment: return "[0, 1]";
  case carrier_kind::boolean: return "{0, 1}";
  case carrier_kind::nonnegative_reals: return "[0, +inf)";
  }
  return "?";
}

bool carrier_contains(carrier_kind kind, double x) noexcept {
  if (std::isnan(x)) return false;
  switch (kind) {
  case carrier_kind::reals_with_neg_inf: return x != inf;
  case carrier_kind::reals_with_pos_inf: return x != -inf;
  case carrier_kind::extended_reals: return true;
  case carrier_kind::unit_segment: return x >= 0.0 && x <= 1.0;
  case carrier_kind::boolean: return x == 0.0 || x == 1.0;
  case carrier_kind::nonnegative_reals: return x >= 0.0 && x != inf;
  }
  return false;
}

double semiring::check(double x) const {
  if (!in_carrier(x)) {
    throw domain_error(std::string(name_) + ": " + format(x) + " is not in the carrier " +
                       std::string(carrier_description(carrier_)));
  }
  return x;
}

double semiring::add(double a, double b) const {
  check(a);
  check(b);
  return add_(a, b);
}

double semiring::mul(double a, double b) const {
  check(a);
  check(b);
  if (a == zero_ || b == zero_) return zero_;
  return mul_(a, b);
}

std::optional<double> semiring::inverse(double a) const {
  check(a);
  if (!inverse_ || a == zero_) return std::nullopt;
  return inverse_(a);
}

bool semiring::law_equal(double a, double b) const noexcept {
  if (a == b) return true;
  if (flags_.tolerance == 0.0 || !std::isfinite(a) || !std::isfinite(b)) return false;
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= flags_.tolerance * scale;
}

bool semiring::leq(double a, double b) const {
  if (!flags_.idempotent) {
    throw unsupported_operation(std::string(name_) +
                                ": the standard order needs an idempotent addition");
  }
  return equal(add(a, b), b);
}

std::string semiring::format(double x) const {
  if (std::isnan(x)) return "nan";
  if (x == inf) return "inf";
  if (x == -inf) return "-inf";
  if (x == 0.0) return "0";
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

double semiring::parse(std::string_view token) const {
  if (token == "_") return zero_;
  double value = 0.0;
  if (token == "inf" || token == "+inf") {
    value = inf;
  } else if (token == "-inf") {
    value = -inf;
  } else {
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() ||
        std::isnan(value)) {
      throw parse_error("not a number: '" + std::string(token) + "'");
    }
  }
  return check(value);
}

namespace detail {
std::optional<double> negate_inverse(double a) noexcept { return -a; }
std::optional<double> boolean_inverse(double a) noexcept {
  return a == 1.0 ? std::optional<double>(1.0) : std::nullopt;
}
std::optional<double> reciprocal_inverse(double a) noexcept { return 1.0 / a; }
} // namespace detail

namespace {
constexpr std::array<const semiring*, 6> catalogue{&max_plus, &min_plus, &boolean,
                                                   &fuzzy,    &max_min,  &arith};
constexpr std::array<const semiring*, 5> idempotent_catalogue{&max_plus, &min_plus, &boolean,
                                                              &fuzzy, &max_min};

bool iequals(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    auto lower = [](char c) { return c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c; };
    return lower(x) == lower(y);
  });
}
} // namespace

std::span<const semiring* const> builtin_semirings() noexcept { return catalogue; }
std::span<const semiring* const> idempotent_semirings() noexcept { return idempotent_catalogue; }

const semiring& semiring_by_name(std::string_view name) {
  for (const semiring* s : catalogue) {
    if (iequals(s->name(), name)) return *s;
  }
  throw domain_error("unknown semiring '" + std::string(name) +
                     "' (expected max-plus, min-plus, boolean, fuzzy, max-min or arith)");
}

dequantization_scale::dequantization_scale(double h) : h_(h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw domain_error("dequantization scale must be a positive finite number");
  }
}

namespace {
void require_finite(double u, double v) {
  if (!std::isfinite(u) || !std::isfinite(v)) {
    throw domain_error("dequantized addition needs finite operands");
  }
}
} // namespace

long double dequantized_excess(double u, double v, dequantization_scale h) {
  require_finite(u, v);
  const long double scale = h.value();
  const long double gap = std::fabs(static_cast<long double>(u) - static_cast<long double>(v));
  return scale * std::log1p(std::exp(-gap / scale));
}

double dequantized_add(double u, double v, dequantization_scale h) {
  require_finite(u, v);
  const double hv = h.value();
  return std::max(u, v) + hv * std::log1p(std::exp(-std::abs(u - v) / hv));
}

double dequantize(double x, dequantization_scale h) {
  if (std::isnan(x) || x < 0.0) throw domain_error("dequantize needs a nonnegative argument");
  if (x == 0.0) return -inf;
  return h.value() * std::log(x);
}

} // namespace idem
