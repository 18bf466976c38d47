#include <doctest.h>

#include "oracles.hpp"
#include "plh/pagroup.hpp"
#include "plh/random.hpp"

using namespace plh;
using oracle::q;

namespace {

const std::vector<Rational> kBases{Rational(2), Rational(3, 2), Rational(5, 3)};

// Scans (n, m) by n + m, then n, for the first pair whose lines meet
// strictly inside the rectangle source x target.
Point connect_oracle(const Rational& a, const Interval& s, const Interval& t) {
  for (long total = 2; total < 200; ++total)
    for (long n = 1; n < total; ++n) {
      const long m = total - n;
      const Rational up = pow(a, n), down = pow(a, -m);
      // r + up (x - p) = s_hi + down (x - q)
      const Rational x = (t.hi() - t.lo() + up * s.lo() - down * s.hi()) / (up - down);
      const Rational y = t.lo() + up * (x - s.lo());
      if (s.lo() < x && x < s.hi() && t.lo() < y && y < t.hi()) return {x, y};
    }
  FAIL("no connector found");
  return {};
}

// xi in (1/a, 1] with v = xi a^{-j}, found by repeated scaling.
Rational xi_oracle(const Rational& a, Rational v) {
  while (v <= Rational(1) / a) v *= a;
  while (v > Rational(1)) v /= a;
  return v;
}

// Largest a^{-i}, i >= 1, inside the left linear piece of g.
Rational power_start(const PLHomeo& g, const Rational& a) {
  Rational x = Rational(1) / a;
  while (x > oracle::left_zone_end(g)) x /= a;
  return x;
}

// psi^{-1} g^N phi (t) with unit-domain affine monitor maps of the common
// slope a^{-n}(1 - 1/a).
Rational gamma_oracle(const Rational& a, const PLHomeo& g, long n, const Rational& t) {
  const Rational w = pow(a, -n) * (Rational(1) - Rational(1) / a);
  Rational x = pow(a, -n - 1);
  const Rational target = Rational(1) - pow(a, -n);
  long steps = 0;
  while (x < target) {
    x = oracle::eval(g, x);
    ++steps;
  }
  REQUIRE(x == target);
  const Rational y = oracle::eval_power(g, steps, pow(a, -n - 1) + w * t);
  return (y - target) / w;
}

void check_gamma(const Rational& a, const PLHomeo& g, long n, const PLHomeo& value) {
  std::vector<Rational> xs;
  for (const Point& p : value.breakpoints()) xs.push_back(p.x);
  for (int i = 0; i <= 12; ++i) xs.push_back(q(i, 12));
  for (const Rational& t : oracle::probe_points(xs))
    CHECK(value.evaluate(t) == gamma_oracle(a, g, n, t));
}

} // namespace

TEST_CASE("context rejects bases not above one") {
  CHECK_THROWS_AS(pa::PaContext(Rational(1)), Error);
  CHECK_THROWS_AS(pa::PaContext(q(1, 2)), Error);
  CHECK_THROWS_AS(GroupKind::Pa(Rational(1)), Error);
}

TEST_CASE("connector on the unit interval for base 2") {
  const Fragment c = pa::pa_connect(pa::PaContext(Rational(2)), Interval::unit(), Interval::unit());
  CHECK(c.points() == std::vector<Point>{{0, 0}, {q(1, 3), q(2, 3)}, {1, 1}});
}

TEST_CASE("connector for base 3/2") {
  const pa::PaContext ctx(q(3, 2));
  const Interval s(q(1, 4), q(1, 2)), t(q(1, 3), q(3, 4));
  const Fragment c = pa::pa_connect(ctx, s, t);
  CHECK(c.domain() == s);
  CHECK(c.range() == t);
  for (const Rational& slope : c.slopes()) CHECK(log_exact(ctx.a(), slope).has_value());
  REQUIRE(c.points().size() == 3);
  CHECK(c.points()[1] == connect_oracle(ctx.a(), s, t));
}

TEST_CASE("connector matches the minimal-pair scan on random intervals") {
  gen::Rng rng(51);
  for (const Rational& a : kBases) {
    const pa::PaContext ctx(a);
    for (int i = 0; i < 100; ++i) {
      const Rational s0 = gen::rational_in(rng, 0, 1), s1 = gen::rational_in(rng, s0, 1);
      const Rational t0 = gen::rational_in(rng, 0, 1), t1 = gen::rational_in(rng, t0, 1);
      const Interval s(s0, s1), t(t0, t1);
      const Fragment c = pa::pa_connect(ctx, s, t);
      CHECK(c.domain() == s);
      CHECK(c.range() == t);
      for (const Rational& slope : c.slopes()) CHECK(log_exact(a, slope).has_value());
      CHECK(c.points()[1] == connect_oracle(a, s, t));
    }
  }
}

TEST_CASE("alpha in base a") {
  const pa::PaContext three_halves(q(3, 2));
  // Slopes 9/4, 1, 2/3.
  const PLHomeo f =
      PLHomeo::from_canonical({{0, 0}, {q(1, 10), q(9, 40)}, {q(5, 8), q(3, 4)}, {1, 1}});
  CHECK(pa::alpha_a(three_halves, f) == AlphaPair{2, -1});
  CHECK(pa::alpha_a(three_halves, PLHomeo::identity()) == AlphaPair{0, 0});

  const pa::PaContext two(Rational(2));
  const Fragment c = pa::pa_connect(two, Interval::unit(), Interval::unit());
  CHECK(pa::alpha_a(two, extend_by_identity(c)) == AlphaPair{1, -1});
  CHECK_THROWS_AS(pa::alpha_a(three_halves, oracle::x0()), Error);
}

TEST_CASE("beta in base 2 for the basic element") {
  const pa::PaContext two(Rational(2));
  CHECK(pa::beta_a(two, oracle::g_star()) == Rational(1));
  CHECK(pa::is_Pa11(two, oracle::g_star()));
  CHECK_FALSE(pa::is_Pa11(pa::PaContext(q(3, 2)), oracle::g_star()));
}

TEST_CASE("beta realizer round trips against the orbit oracle") {
  for (const Rational& a : kBases) {
    const pa::PaContext ctx(a);
    const Rational lo = Rational(1) / a;
    for (int i = 1; i <= 20; ++i) {
      const Rational xi = lo + (Rational(1) - lo) * q(i, 20);
      CAPTURE(xi.str());
      const PLHomeo g = pa::realize_beta_a(ctx, xi);
      CHECK(pa::is_Pa11(ctx, g));
      CHECK(xi_oracle(a, oracle::far_gap(g, power_start(g, a))) == xi);
      CHECK(pa::beta_a(ctx, g) == xi);
    }
    CHECK_THROWS_AS(pa::realize_beta_a(ctx, lo), Error);
    CHECK_THROWS_AS(pa::realize_beta_a(ctx, q(3, 2)), Error);
  }
  CHECK(pa::beta_a(pa::PaContext(Rational(2)),
                   pa::realize_beta_a(pa::PaContext(Rational(2)), q(3, 4))) == q(3, 4));
}

TEST_CASE("beta in base a is a class function on random conjugates") {
  gen::Rng rng(53);
  for (const Rational& a : kBases) {
    const pa::PaContext ctx(a);
    for (int i = 0; i < 40; ++i) {
      const PLHomeo g = gen::element_11(rng, ctx.kind());
      const PLHomeo f = gen::element(rng, ctx.kind());
      const PLHomeo h = conjugate(g, f);
      const Rational xi = xi_oracle(a, oracle::far_gap(g, power_start(g, a)));
      CHECK(Rational(1) / a < xi);
      CHECK(xi <= Rational(1));
      CHECK(pa::beta_a(ctx, g) == xi);
      CHECK(xi_oracle(a, oracle::far_gap(h, power_start(h, a) / a)) == xi);
      CHECK(pa::beta_a(ctx, h) == xi);
    }
  }
}

TEST_CASE("gamma in base 2 agrees with the dyadic gamma") {
  const pa::PaContext two(Rational(2));
  CHECK(pa::gamma_a(two, oracle::g_star()).is_identity());
  CHECK(thompson::gamma(oracle::g_star()).is_identity());
  const PLHomeo g = pa::realize_gamma_a(two, PLHomeo::identity());
  CHECK(pa::gamma_a(two, g).is_identity());
  // The connector breaks at thirds, so this realizer lies outside F.
  CHECK_FALSE(member(GroupKind::F(), g));
}

TEST_CASE("gamma in base a against the return-map oracle") {
  gen::Rng rng(57);
  for (const Rational& a : kBases) {
    const pa::PaContext ctx(a);
    for (int i = 0; i < 15; ++i) {
      const PLHomeo g = gen::element_11(rng, ctx.kind(), true);
      const long n0 = levels::min_admissible(g, a);
      const PLHomeo first = pa::gamma_a(ctx, g);
      for (long n = n0; n <= n0 + 3; ++n) {
        const PLHomeo value = pa::gamma_a_at(ctx, g, n).value;
        CHECK(value == first);
        check_gamma(a, g, n, value);
      }
      const PLHomeo f = gen::element(rng, ctx.kind());
      CHECK(pa::gamma_a(ctx, conjugate(g, f)) == first);
    }
  }
}

TEST_CASE("gamma realizer round trips in every base") {
  gen::Rng rng(59);
  for (const Rational& a : kBases) {
    const pa::PaContext ctx(a);
    for (int i = 0; i < 15; ++i) {
      const PLHomeo t = gen::element(rng, ctx.kind());
      const PLHomeo g = pa::realize_gamma_a(ctx, t);
      CHECK(pa::is_Pa11(ctx, g));
      check_gamma(a, g, levels::min_admissible(g, a), t);
    }
  }
}

TEST_CASE("base 2 beta is the odd part rescaled") {
  gen::Rng rng(61);
  const pa::PaContext two(Rational(2));
  for (int i = 0; i < 50; ++i) {
    const PLHomeo g = gen::element_11(rng, GroupKind::F());
    const mpz_class k = thompson::beta(g);
    CHECK(pa::beta_a(two, g) == xi_oracle(Rational(2), Rational::from_integers(k, 1)));
  }
}
