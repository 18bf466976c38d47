#include <doctest.h>

#include <random>

#include "plh/json_io.hpp"
#include "plh/plmap.hpp"

using namespace plh;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

PLHomeo x0() {
  return PLHomeo::from_canonical({{0, 0}, {q(1, 2), q(1, 4)}, {q(3, 4), q(1, 2)}, {1, 1}});
}
PLHomeo x1() {
  return PLHomeo::from_canonical(
      {{0, 0}, {q(1, 2), q(1, 2)}, {q(3, 4), q(5, 8)}, {q(7, 8), q(3, 4)}, {1, 1}});
}

// Reference evaluation straight from the breakpoint list.
Rational oracle_eval(const std::vector<Point>& pts, const Rational& x) {
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (x <= pts[i].x) {
      const Point &a = pts[i - 1], &b = pts[i];
      return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    }
  return pts.back().y;
}

PLHomeo random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<long> den(2, 40);
  const int k = count(rng);
  std::vector<Rational> xs, ys;
  for (int i = 0; i < k; ++i) {
    const long d1 = den(rng), d2 = den(rng);
    xs.push_back(q(std::uniform_int_distribution<long>(1, d1 - 1)(rng), d1));
    ys.push_back(q(std::uniform_int_distribution<long>(1, d2 - 1)(rng), d2));
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<Point> pts{{0, 0}};
  for (std::size_t i = 0; i < std::min(xs.size(), ys.size()); ++i) pts.push_back({xs[i], ys[i]});
  pts.push_back({1, 1});
  return PLHomeo::from_breakpoints(pts);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::usage;
}

} // namespace

TEST_CASE("evaluation of the generator x0") {
  const PLHomeo f = x0();
  CHECK(f.evaluate(q(7, 8)) == q(3, 4));
  CHECK(f.evaluate(q(1, 4)) == q(1, 8));
  CHECK(f.evaluate(q(5, 8)) == q(3, 8));
  CHECK(f.inverse_evaluate(q(3, 4)) == q(7, 8));
  CHECK(f.slope_at_zero() == q(1, 2));
  CHECK(f.slope_at_one() == q(2));
}

TEST_CASE("inverse swaps coordinates") {
  const PLHomeo expected =
      PLHomeo::from_canonical({{0, 0}, {q(1, 4), q(1, 2)}, {q(1, 2), q(3, 4)}, {1, 1}});
  CHECK(invert(x0()) == expected);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const PLHomeo f = random_element(rng);
    std::vector<Point> swapped;
    for (const Point& p : f.breakpoints()) swapped.push_back({p.y, p.x});
    CHECK(invert(f) == PLHomeo::from_canonical(swapped));
  }
}

TEST_CASE("composition agrees with pointwise evaluation") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const PLHomeo f = random_element(rng), g = random_element(rng);
    const PLHomeo fg = compose(f, g);
    // Every candidate break of f o g, plus midpoints between them.
    std::vector<Rational> xs;
    for (const Point& p : g.breakpoints()) xs.push_back(p.x);
    for (const Point& p : f.breakpoints()) xs.push_back(g.inverse_evaluate(p.x));
    std::sort(xs.begin(), xs.end());
    const std::size_t breaks = xs.size();
    for (std::size_t k = 0; k + 1 < breaks; ++k) xs.push_back((xs[k] + xs[k + 1]) / q(2));
    for (const Rational& x : xs)
      CHECK(fg.evaluate(x) == oracle_eval(f.breakpoints(), oracle_eval(g.breakpoints(), x)));
    const std::vector<Rational> s = fg.slopes();
    for (std::size_t k = 1; k < s.size(); ++k) CHECK(s[k] != s[k - 1]);
  }
}

TEST_CASE("composition of the standard generators") {
  // x0 o x1, derived by hand on the common refinement.
  const PLHomeo expected =
      PLHomeo::from_canonical({{0, 0}, {q(3, 4), q(3, 8)}, {q(7, 8), q(1, 2)}, {1, 1}});
  CHECK(compose(x0(), x1()) == expected);
  CHECK(compose(x0(), invert(x0())).is_identity());
}

TEST_CASE("conjugation convention is g h g^-1") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const PLHomeo h = random_element(rng), g = random_element(rng);
    const PLHomeo c = conjugate(h, g);
    CHECK(c == compose(g, compose(h, invert(g))));
    const Rational x = q(std::uniform_int_distribution<long>(0, 97)(rng), 97);
    CHECK(c.evaluate(g.evaluate(x)) == g.evaluate(h.evaluate(x)));
    CHECK(commutator(g, h) == compose(compose(g, h), compose(invert(g), invert(h))));
  }
}

TEST_CASE("powers") {
  const PLHomeo f = x0();
  CHECK(power(f, 0).is_identity());
  CHECK(power(f, 3) == compose(f, compose(f, f)));
  CHECK(power(f, -3) == invert(power(f, 3)));
}

TEST_CASE("construction validates and canonicalizes") {
  const PLHomeo f =
      PLHomeo::from_breakpoints({{0, 0}, {q(1, 4), q(1, 4)}, {q(1, 2), q(1, 2)}, {1, 1}});
  CHECK(f.is_identity());
  CHECK(code_of([] { PLHomeo::from_canonical({{0, 0}, {q(1, 2), q(1, 2)}, {1, 1}}); }) ==
        ErrorCode::non_canonical);
  CHECK(code_of([] {
          PLHomeo::from_breakpoints({{0, 0}, {q(1, 2), q(3, 4)}, {q(1, 4), q(7, 8)}, {1, 1}});
        }) == ErrorCode::domain);
  CHECK(code_of([] {
          PLHomeo::from_breakpoints({{0, 0}, {q(1, 2), q(3, 4)}, {q(3, 4), q(1, 2)}, {1, 1}});
        }) == ErrorCode::domain);
  CHECK(code_of([] { PLHomeo::from_breakpoints({{0, q(1, 8)}, {1, 1}}); }) == ErrorCode::domain);
  CHECK(code_of([] { (void)x0().evaluate(q(3, 2)); }) == ErrorCode::domain);
  try {
    PLHomeo::from_canonical({{0, 0}, {q(1, 4), q(1, 8)}, {q(1, 2), q(1, 4)}, {1, 1}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("index 1") != std::string::npos);
  }
}

TEST_CASE("s_left and support") {
  CHECK(s_left(PLHomeo()) == q(1));
  CHECK(s_left(x0()) == q(0));
  CHECK(s_left(x1()) == q(1, 2));
  CHECK(support_within(x1(), Interval(q(1, 2), q(1))));
  CHECK_FALSE(support_within(x1(), Interval(q(3, 4), q(1))));
}

TEST_CASE("end zones") {
  const EndZones z = end_zones(x0());
  CHECK(z.left == Interval(q(0), q(1, 2)));
  CHECK(z.right == Interval(q(3, 4), q(1)));
  CHECK(z.slope0 == q(1, 2));
  CHECK(z.slope1 == q(2));
  const EndZones id = end_zones(PLHomeo());
  CHECK(id.left == Interval::unit());
}

TEST_CASE("embed, extract and transport") {
  const Interval i(q(1, 4), q(1, 2));
  const PLHomeo e = embed(x0(), i);
  CHECK(support_within(e, i));
  // phi_I(t) = 1/4 + t/4, so e(3/8) = phi_I(x0(1/2)) = 1/4 + 1/16.
  CHECK(e.evaluate(q(3, 8)) == q(5, 16));
  CHECK(extract(e, i) == x0());
  CHECK(code_of([&] { (void)extract(x0(), i); }) == ErrorCode::precondition);

  // x0 maps [3/4, 1] onto [1/2, 1] linearly.
  CHECK(transport(x0(), Interval(q(3, 4), q(1)), Interval(q(1, 2), q(1))).is_identity());
  CHECK(transport(x0(), AffineMap::between(Interval(q(0), q(1, 2)), Interval(q(0), q(1, 4))))
            .is_identity());
  CHECK(code_of([] { (void)transport(x0(), Interval::unit(), Interval(q(0), q(1, 2))); }) ==
        ErrorCode::precondition);
}

TEST_CASE("fragments, splicing and extension") {
  const Fragment left({{0, 0}, {q(1, 2), q(1, 4)}});
  const Fragment right({{q(1, 2), q(1, 4)}, {q(3, 4), q(1, 2)}, {1, 1}});
  const std::vector<Fragment> pieces{left, right};
  CHECK(splice(pieces) == x0());
  const Fragment r = restrict_to(x0(), Interval(q(1, 4), q(7, 8)));
  CHECK(r.domain() == Interval(q(1, 4), q(7, 8)));
  CHECK(r.range() == Interval(q(1, 8), q(3, 4)));
  CHECK(normalize(r).evaluate(q(1, 2)) ==
        (x0().evaluate(q(9, 16)) - q(1, 8)) / (q(3, 4) - q(1, 8)));
  const Fragment f = apply_power(x0(), 2, Fragment::identity_on(Interval(q(1, 2), q(1))));
  CHECK(f.range() == Interval(q(1, 8), q(1)));
  CHECK(code_of([&] { (void)extend_by_identity(r); }) == ErrorCode::precondition);
}

TEST_CASE("orbits and words") {
  const PLHomeo g = invert(x0());
  const OrbitHit hit = orbit_until(g, q(1, 16), q(3, 4));
  CHECK(hit.steps == 4);
  CHECK(hit.point == q(3, 4));
  CHECK(code_of([] { (void)orbit_until(PLHomeo(), q(1, 2), q(3, 4), 50); }) ==
        ErrorCode::iteration_cap);
  CHECK(strictly_above_diagonal(g));
  CHECK_FALSE(strictly_above_diagonal(x0()));

  // The rightmost letter acts first.
  const std::vector<Letter> word{{"a", x0(), 1}, {"b", x1(), -2}};
  CHECK(word_value(word) == compose(x0(), power(x1(), -2)));
  CHECK(word_str(word) == "a^1 b^-2");
  const Fragment moved = apply_word(word, Fragment::identity_on(Interval::unit()));
  CHECK(extend_by_identity(moved) == word_value(word));
}

TEST_CASE("JSON round trip and strict parsing") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const PLHomeo f = random_element(rng);
    CHECK(element_from_text(to_json(f).dump()) == f);
  }
  CHECK(to_json(x0()).dump() ==
        R"({"breakpoints":[["0","0"],["1/2","1/4"],["3/4","1/2"],["1","1"]]})");
  CHECK(
      element_from_text(R"({"breakpoints":[["0","0"],["1","1"]],"note":"ignored"})").is_identity());
  CHECK(code_of([] { element_from_text("{"); }) == ErrorCode::parse);
  CHECK(code_of([] { element_from_text(R"({"points":[]})"); }) == ErrorCode::parse);
  CHECK(code_of([] { element_from_text(R"({"breakpoints":[[0,0],[1,1]]})"); }) == ErrorCode::parse);
  CHECK(code_of([] {
          element_from_text(R"({"breakpoints":[["0","0"],["1/2","1/2"],["1","1"]]})");
        }) == ErrorCode::non_canonical);
  CHECK(code_of([] {
          element_from_text(R"({"breakpoints":[["0","0"],["1/x","1/2"],["1","1"]]})");
        }) == ErrorCode::parse);
}
