#include "plh/levels.hpp"

namespace plh::levels {

Interval source_level(const Rational& a, long n) { return Interval(pow(a, -n - 1), pow(a, -n)); }

Interval target_level(const Rational& a, long n) {
  return Interval(Rational(1) - pow(a, -n), Rational(1) - pow(a, -n - 1));
}

bool admissible(const PLHomeo& g, const Rational& a, long n) {
  if (n < 1) return false;
  const EndZones zones = end_zones(g);
  const Rational width = pow(a, -n);
  return width <= zones.left.hi() && width <= Rational(1) - zones.right.lo();
}

long min_admissible(const PLHomeo& g, const Rational& a) {
  const EndZones zones = end_zones(g);
  const Rational limit = std::min(zones.left.hi(), Rational(1) - zones.right.lo());
  long n = 1;
  Rational width = Rational(1) / a;
  while (width > limit) {
    width /= a;
    ++n;
  }
  return n;
}

long level_exponent(const PLHomeo& g, const Rational& a, long n) {
  if (!admissible(g, a, n))
    throw Error(ErrorCode::precondition,
                "level " + std::to_string(n) + " is not inside both end linear zones");
  const Interval source = source_level(a, n);
  const Interval target = target_level(a, n);
  const OrbitHit hit = orbit_until(g, source.lo(), target.lo());
  if (hit.point != target.lo())
    throw Error(ErrorCode::precondition, "orbit of " + source.lo().str() + " steps over " +
                                             target.lo().str() + " (far-end invariant is not 1)");
  return hit.steps;
}

ReturnMap return_map(const PLHomeo& g, const Rational& a, long n) {
  const long exponent = level_exponent(g, a, n);
  const Interval source = source_level(a, n);
  const Fragment piece = apply_power(g, exponent, Fragment::identity_on(source));
  if (piece.range() != target_level(a, n))
    throw Error(ErrorCode::verification, "return map does not land on the target level");
  return ReturnMap{n, exponent, normalize(piece)};
}

Rational default_start(const PLHomeo& g, const Rational& a) {
  const Rational edge = end_zones(g).left.hi();
  Rational point = Rational(1) / a;
  while (point > edge) point /= a;
  return point;
}

Rational far_end_gap(const PLHomeo& g, const Rational& start) {
  if (!(Rational(0) < start && start < Rational(1)))
    throw Error(ErrorCode::domain, "orbit start " + start.str() + " must lie in (0,1)");
  const OrbitHit hit = orbit_until(g, start, end_zones(g).right.lo());
  return Rational(1) - hit.point;
}

PLHomeo chain_element(const Rational& a, const Rational& p, const std::vector<Rational>& mids,
                      const Rational& c, const Connector& connect) {
  std::vector<Rational> z{p, a * p};
  z.insert(z.end(), mids.begin(), mids.end());
  z.push_back(c);
  z.push_back(Rational(1) - (Rational(1) - c) / a);
  if (!(Rational(0) < p)) throw Error(ErrorCode::domain, "chain_element: p must be positive");
  for (std::size_t i = 1; i < z.size(); ++i)
    if (!(z[i - 1] < z[i]))
      throw Error(ErrorCode::domain,
                  "chain_element: chain not strictly increasing at " + std::to_string(i));
  if (!(z.back() < Rational(1))) throw Error(ErrorCode::domain, "chain_element: c must be < 1");

  std::vector<Fragment> pieces;
  pieces.emplace_back(std::vector<Point>{Point{Rational(0), Rational(0)}, Point{p, z[1]}});
  for (std::size_t i = 0; i + 2 < z.size(); ++i)
    pieces.push_back(connect(Interval(z[i], z[i + 1]), Interval(z[i + 1], z[i + 2])));
  pieces.emplace_back(std::vector<Point>{Point{c, z.back()}, Point{Rational(1), Rational(1)}});
  return splice(pieces);
}

PLHomeo retarget(const PLHomeo& g, const Rational& a, long n, const PLHomeo& f) {
  return compose(embed(f, target_level(a, n)), g);
}

} // namespace plh::levels
