#pragma once

#include "idem/fuzzy.hpp"
#include "idem/interval.hpp"
#include "idem/semiring.hpp"

#include <functional>
#include <random>

namespace idem {

using rng_type = std::mt19937_64;

/// Random carrier elements of a built-in semiring. Finite values are drawn
/// from a grid of multiples of 1/8 in [-100, 100] (or of 1/64 in [0, 1]) so
/// that max, min and + act exactly on them; the ring's infinite points show up
/// with small fixed probability. Arith samples are arbitrary reals in [0, 100].
std::function<double(rng_type&)> scalar_sampler(const semiring& ring);

/// Intervals whose bounds come from `scalar_sampler`, ordered by the
/// standard order of the base.
std::function<interval<double>(rng_type&)> interval_sampler(const interval_semiring<semiring>& ring);

/// Functions on the ring's universe; each point is left out (grade zero) with
/// probability 0.3.
std::function<finite_function<semiring>(rng_type&)>
function_sampler(const function_semiring<semiring>& ring);

} // namespace idem
