#pragma once

// Reference computations that read breakpoint lists directly and share no
// code with the library beyond the Rational type.

#include <vector>

#include "plh/plmap.hpp"

namespace oracle {

using plh::Point;
using plh::Rational;

inline Rational q(long n, long d = 1) { return Rational(n, d); }

inline Rational eval(const std::vector<Point>& pts, const Rational& x) {
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (x <= pts[i].x) {
      const Point &a = pts[i - 1], &b = pts[i];
      return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    }
  return pts.back().y;
}

inline Rational eval(const plh::PLHomeo& f, const Rational& x) { return eval(f.breakpoints(), x); }

inline Rational eval_power(const plh::PLHomeo& f, long n, Rational x) {
  std::vector<Point> inv;
  for (const Point& p : f.breakpoints()) inv.push_back({p.y, p.x});
  for (long i = 0; i < n; ++i) x = eval(f.breakpoints(), x);
  for (long i = 0; i < -n; ++i) x = eval(inv, x);
  return x;
}

// End of the first linear piece and start of the last one.
inline Rational left_zone_end(const plh::PLHomeo& f) { return f.breakpoints()[1].x; }
inline Rational right_zone_start(const plh::PLHomeo& f) {
  return f.breakpoints()[f.breakpoints().size() - 2].x;
}

// Odd numerator of a dyadic 1 - y.
inline mpz_class odd_numerator(const Rational& v) {
  mpz_class n = v.num();
  while (n % 2 == 0) n /= 2;
  return n;
}

// Far-end orbit gap 1 - y for the orbit of `start`.
inline Rational far_gap(const plh::PLHomeo& g, Rational start) {
  const Rational edge = right_zone_start(g);
  while (start < edge) start = eval(g, start);
  return Rational(1) - start;
}

inline plh::PLHomeo x0() {
  return plh::PLHomeo::from_canonical({{0, 0}, {q(1, 2), q(1, 4)}, {q(3, 4), q(1, 2)}, {1, 1}});
}

// 2x on [0,1/4], x + 1/4 on [1/4,1/2], (x+1)/2 on [1/2,1].
inline plh::PLHomeo g_star() {
  return plh::PLHomeo::from_canonical({{0, 0}, {q(1, 4), q(1, 2)}, {q(1, 2), q(3, 4)}, {1, 1}});
}

// Points at which two PL maps must agree for them to be equal: the union
// of both breakpoint sets and midpoints between consecutive ones.
inline std::vector<Rational> probe_points(std::vector<Rational> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const std::size_t breaks = xs.size();
  for (std::size_t k = 0; k + 1 < breaks; ++k) xs.push_back((xs[k] + xs[k + 1]) / q(2));
  return xs;
}

} // namespace oracle
