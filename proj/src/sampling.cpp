#include "idem/sampling.hpp"

namespace idem {

std::function<double(rng_type&)> scalar_sampler(const semiring& ring) {
  const carrier_kind kind = ring.carrier();
  return [kind](rng_type& rng) -> double {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> grid(-800, 800);
    const double roll = unit(rng);
    switch (kind) {
    case carrier_kind::reals_with_neg_inf:
      return roll < 0.1 ? -inf : grid(rng) / 8.0;
    case carrier_kind::reals_with_pos_inf:
      return roll < 0.1 ? inf : grid(rng) / 8.0;
    case carrier_kind::extended_reals:
      if (roll < 0.05) return -inf;
      if (roll < 0.10) return inf;
      return grid(rng) / 8.0;
    case carrier_kind::unit_segment:
      return std::uniform_int_distribution<int>(0, 64)(rng) / 64.0;
    case carrier_kind::boolean:
      return roll < 0.5 ? 0.0 : 1.0;
    case carrier_kind::nonnegative_reals:
      return roll < 0.1 ? 0.0 : std::uniform_real_distribution<double>(0.0, 100.0)(rng);
    }
    return 0.0;
  };
}

std::function<interval<double>(rng_type&)> interval_sampler(const interval_semiring<semiring>& ring) {
  const semiring base = ring.base();
  auto sample = scalar_sampler(base);
  return [base, sample](rng_type& rng) {
    const double a = sample(rng);
    const double b = sample(rng);
    return base.leq(a, b) ? interval<double>{a, b} : interval<double>{b, a};
  };
}

std::function<finite_function<semiring>(rng_type&)>
function_sampler(const function_semiring<semiring>& ring) {
  const semiring base = ring.base();
  const universe points = ring.universe();
  auto sample = scalar_sampler(base);
  return [base, points, sample](rng_type& rng) {
    std::bernoulli_distribution present(0.7);
    finite_function<semiring> f(base);
    for (const auto& p : points)
      if (present(rng)) f.set(p, sample(rng));
    return f;
  };
}

} // namespace idem
