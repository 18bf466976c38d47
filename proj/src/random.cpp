#include "plh/random.hpp"

#include <algorithm>

namespace plh::gen {

namespace {

mpz_class floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

template <class Draw> std::vector<Rational> sorted_draws(Rng& rng, long count, Draw draw) {
  std::vector<Rational> out;
  for (long i = 0; i < count; ++i) out.push_back(draw(rng));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Fragment join(const GroupKind& kind, const std::vector<Point>& nodes) {
  if (kind.tag == GroupTag::P || kind.tag == GroupTag::PQ) return Fragment(nodes);
  std::vector<Point> pts{nodes.front()};
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const Interval s(nodes[i - 1].x, nodes[i].x);
    const Interval t(nodes[i - 1].y, nodes[i].y);
    const Fragment piece = kind.tag == GroupTag::F ? thompson::dyadic_bridge(s, t)
                                                   : pa::pa_connect(pa::PaContext(kind.a), s, t);
    pts.insert(pts.end(), piece.points().begin() + 1, piece.points().end());
  }
  return Fragment(std::move(pts));
}

} // namespace

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rational dyadic_in(Rng& rng, const Rational& lo, const Rational& hi, int extra) {
  if (!(lo < hi)) throw Error(ErrorCode::domain, "dyadic_in: empty interval");
  long depth = 0;
  mpz_class scale = 1;
  // Coarsest grid 2^{-depth} with a node strictly inside (lo, hi).
  while (floor_of(hi * Rational::from_integers(scale, 1)) -
             floor_of(lo * Rational::from_integers(scale, 1)) <
         2) {
    ++depth;
    scale <<= 1;
  }
  const long shift = uniform(rng, 0, extra);
  scale <<= shift;
  const Rational s = Rational::from_integers(scale, 1);
  const mpz_class first = floor_of(lo * s) + 1;
  mpz_class last = floor_of(hi * s);
  if (Rational::from_integers(last, scale) == hi) last -= 1;
  const mpz_class span = last - first;
  const long offset = uniform(rng, 0, span.get_si());
  return Rational::from_integers(first + offset, scale);
}

Rational rational_in(Rng& rng, const Rational& lo, const Rational& hi, long max_den) {
  const long d = uniform(rng, 2, std::max(2L, max_den));
  const long k = uniform(rng, 1, d - 1);
  return lo + (hi - lo) * Rational(k, d);
}

Fragment bridge(Rng& rng, const GroupKind& kind, const Interval& source, const Interval& target,
                int max_points) {
  const long count = uniform(rng, 0, max_points);
  const bool dyadic = kind.tag == GroupTag::F;
  const auto draw_in = [&](const Interval& in) {
    return [&in, dyadic](Rng& r) {
      return dyadic ? dyadic_in(r, in.lo(), in.hi()) : rational_in(r, in.lo(), in.hi(), 32);
    };
  };
  std::vector<Rational> xs = sorted_draws(rng, count, draw_in(source));
  std::vector<Rational> ys = sorted_draws(rng, count, draw_in(target));
  const std::size_t used = std::min(xs.size(), ys.size());

  std::vector<Point> nodes{Point{source.lo(), target.lo()}};
  for (std::size_t i = 0; i < used; ++i) nodes.push_back(Point{xs[i], ys[i]});
  nodes.push_back(Point{source.hi(), target.hi()});
  return join(kind, nodes);
}

PLHomeo element(Rng& rng, const GroupKind& kind, int max_breaks, long max_den) {
  switch (kind.tag) {
  case GroupTag::F:
    return extend_by_identity(bridge(rng, kind, Interval::unit(), Interval::unit(), 3));
  case GroupTag::Pa:
    return extend_by_identity(bridge(rng, kind, Interval::unit(), Interval::unit(), 3));
  case GroupTag::P:
  case GroupTag::PQ: {
    const long count = uniform(rng, 0, max_breaks);
    const auto draw = [max_den](Rng& r) {
      return rational_in(r, Rational(0), Rational(1), max_den);
    };
    std::vector<Rational> xs = sorted_draws(rng, count, draw);
    std::vector<Rational> ys = sorted_draws(rng, count, draw);
    const std::size_t used = std::min(xs.size(), ys.size());
    std::vector<Point> pts{Point{Rational(0), Rational(0)}};
    for (std::size_t i = 0; i < used; ++i) pts.push_back(Point{xs[i], ys[i]});
    pts.push_back(Point{Rational(1), Rational(1)});
    return PLHomeo::from_breakpoints(std::move(pts));
  }
  }
  throw Error(ErrorCode::usage, "element: unknown group");
}

PLHomeo element_11(Rng& rng, const GroupKind& kind, bool unit_far_end) {
  const Rational a = kind.a;
  const bool dyadic = kind.tag == GroupTag::F;
  // Level intervals only line up with the chain when it starts at a power of a.
  const Rational p = dyadic || unit_far_end
                         ? pow(a, -uniform(rng, 2, 4))
                         : rational_in(rng, Rational(0), Rational(1) / (Rational(2) * a), 16);
  Rational c;
  if (unit_far_end) {
    long j = 1;
    while (!(Rational(1) - pow(a, -j) > a * p)) ++j;
    c = Rational(1) - pow(a, -(j + uniform(rng, 0, 2)));
  } else {
    c = dyadic ? dyadic_in(rng, a * p, Rational(1)) : rational_in(rng, a * p, Rational(1), 32);
  }
  const auto draw_mid = [&](Rng& r) {
    return dyadic ? dyadic_in(r, a * p, c) : rational_in(r, a * p, c, 32);
  };
  const std::vector<Rational> mids = sorted_draws(rng, uniform(rng, 0, 2), draw_mid);
  const auto connect = [&rng, &kind](const Interval& s, const Interval& t) {
    return bridge(rng, kind, s, t, 1);
  };
  return levels::chain_element(a, p, mids, c, connect);
}

Rational basepoint(Rng& rng, const PLHomeo& g) {
  return rational_in(rng, Rational(0), end_zones(g).left.hi() / Rational(2), 16);
}

} // namespace plh::gen
