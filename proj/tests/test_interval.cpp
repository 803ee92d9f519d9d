#include "idem/axioms.hpp"
#include "idem/errors.hpp"
#include "idem/interval.hpp"
#include "idem/sampling.hpp"

#include <doctest.h>

using namespace idem;
using iring = interval_semiring<semiring>;

TEST_CASE("interval addition is componentwise") {
  const iring mp(max_plus);
  CHECK(mp.add(mp.make(1, 2), mp.make(0, 3)) == interval<double>{1, 3});
  const auto x = mp.make(-4, 7);
  CHECK(mp.add(mp.zero(), x) == x);

  // Min-plus bounds live in the reversed order: [5, 2] means 5 <= 2 in min-plus.
  const iring mn(min_plus);
  const auto sum = mn.add(mn.make(5, 2), mn.make(4, 3));
  CHECK(sum == interval<double>{std::min(5.0, 4.0), std::min(2.0, 3.0)});
  CHECK(sum == interval<double>{4, 2});
  CHECK(mn.valid(sum));
}

TEST_CASE("interval multiplication is componentwise") {
  const iring mp(max_plus);
  CHECK(mp.mul(mp.make(1, 3), mp.make(2, 4)) == interval<double>{3, 7});
  const iring fz(fuzzy);
  CHECK(fz.mul(fz.make(0.2, 0.5), fz.make(0.3, 0.9)) == interval<double>{0.2, 0.5});
  for (const semiring* s : idempotent_semirings()) {
    const iring r(*s);
    auto sample = interval_sampler(r);
    rng_type rng(4);
    for (int t = 0; t < 50; ++t) {
      const auto x = sample(rng);
      CHECK(r.mul(r.one(), x) == x);
      CHECK(r.mul(x, r.zero()) == r.zero());
    }
  }
}

TEST_CASE("membership") {
  const iring mp(max_plus);
  CHECK(mp.contains(mp.make(1, 3), 2));
  CHECK_FALSE(mp.contains(mp.make(1, 3), 0));
  CHECK(mp.contains(mp.embed(5), 5));
  const iring mn(min_plus);
  CHECK(mn.contains(mn.make(5, 2), 3));
  CHECK_FALSE(mn.contains(mn.make(5, 2), 6));
}

TEST_CASE("construction validates the standard order") {
  CHECK_THROWS_AS(iring(min_plus).make(2, 5), domain_error);
  CHECK_THROWS_AS(iring(max_plus).make(5, 2), domain_error);
  CHECK_THROWS_AS(iring(max_plus).make(1, inf), domain_error);
  CHECK_THROWS_AS(iring{arith}, unsupported_operation);
  CHECK(iring(fuzzy).name() == "I(fuzzy)");
}

TEST_CASE("I(S) is an idempotent semiring") {
  for (const semiring* s : idempotent_semirings()) {
    CAPTURE(s->name());
    const iring r(*s);
    const auto report = check_axioms(r, interval_sampler(r), 1000);
    for (const auto& res : report.results) {
      CAPTURE(res.name);
      CAPTURE(res.counterexample);
      CHECK(res.status != axiom_status::failed);
    }
    CHECK(report.find("idempotent")->status == axiom_status::passed);
  }
}

TEST_CASE("inclusion isotonicity") {
  rng_type rng(21);
  for (const semiring* s : idempotent_semirings()) {
    CAPTURE(s->name());
    const iring r(*s);
    auto intervals = interval_sampler(r);
    auto points = scalar_sampler(*s);
    // A random carrier point if it falls inside, otherwise one of the bounds.
    auto pick = [&](const interval<double>& x) {
      const double c = points(rng);
      if (r.contains(x, c)) return c;
      return std::bernoulli_distribution(0.5)(rng) ? x.lo : x.hi;
    };
    for (int t = 0; t < 1000; ++t) {
      const auto x = intervals(rng);
      const auto y = intervals(rng);
      const double a = pick(x), b = pick(y);
      REQUIRE(r.contains(x, a));
      REQUIRE(r.contains(y, b));
      CHECK(r.contains(r.add(x, y), s->add(a, b)));
      CHECK(r.contains(r.mul(x, y), s->mul(a, b)));
    }
  }
}

TEST_CASE("standard order on I(S) is the componentwise order") {
  rng_type rng(8);
  for (const semiring* s : idempotent_semirings()) {
    const iring r(*s);
    auto sample = interval_sampler(r);
    for (int t = 0; t < 500; ++t) {
      const auto x = sample(rng);
      const auto y = t % 3 == 0 ? r.add(x, sample(rng)) : sample(rng);
      const bool componentwise = s->leq(x.lo, y.lo) && s->leq(x.hi, y.hi);
      CHECK(r.leq(x, y) == componentwise);
    }
  }
}

TEST_CASE("degenerate intervals embed the base ring") {
  rng_type rng(13);
  for (const semiring* s : idempotent_semirings()) {
    const iring r(*s);
    auto sample = scalar_sampler(*s);
    for (int t = 0; t < 300; ++t) {
      const double a = sample(rng), b = sample(rng);
      CHECK(r.add(r.embed(a), r.embed(b)) == r.embed(s->add(a, b)));
      CHECK(r.mul(r.embed(a), r.embed(b)) == r.embed(s->mul(a, b)));
      CHECK(r.is_degenerate(r.embed(a)));
    }
    CHECK(r.zero() == r.embed(s->zero()));
    CHECK(r.one() == r.embed(s->one()));
  }
}

TEST_CASE("interval text form") {
  const iring mn(min_plus);
  CHECK(mn.parse("[5, 2]") == interval<double>{5, 2});
  CHECK(mn.parse("inf,3") == interval<double>{inf, 3});
  CHECK(mn.parse("4") == interval<double>{4, 4});
  CHECK(mn.format(mn.make(inf, -1)) == "[inf, -1]");
  CHECK_THROWS_AS(mn.parse("[1, 3]"), domain_error);
  CHECK_THROWS_AS(mn.parse("[1, 3"), parse_error);
  const iring mm(max_min);
  CHECK(mm.parse("[-inf, inf]") == interval<double>{-inf, inf});
}
