#include "plh/plmap.hpp"

#include <algorithm>

namespace plh {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool collinear(const Point& a, const Point& b, const Point& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

void validate_monotone(const std::vector<Point>& points, const char* what) {
  if (points.size() < 2)
    throw Error(ErrorCode::domain, std::string(what) + " needs at least two breakpoints");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x))
      throw Error(ErrorCode::domain,
                  std::string(what) + ": x not strictly increasing at index " + std::to_string(i));
    if (!(points[i - 1].y < points[i].y))
      throw Error(ErrorCode::domain,
                  std::string(what) + ": y not strictly increasing at index " + std::to_string(i));
  }
}

void validate_unit_ends(const std::vector<Point>& points) {
  if (points.front() != Point{kZero, kZero})
    throw Error(ErrorCode::domain, "breakpoint list must start at (0,0) (index 0)");
  if (points.back() != Point{kOne, kOne})
    throw Error(ErrorCode::domain, "breakpoint list must end at (1,1) (index " +
                                       std::to_string(points.size() - 1) + ")");
}

Rational interpolate(const Point& a, const Point& b, const Rational& x) {
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

Rational eval_points(const std::vector<Point>& points, const Rational& x) {
  if (x < points.front().x || x > points.back().x)
    throw Error(ErrorCode::domain, "evaluate: " + x.str() + " outside the domain [" +
                                       points.front().x.str() + ", " + points.back().x.str() + "]");
  auto it = std::upper_bound(points.begin(), points.end(), x,
                             [](const Rational& v, const Point& p) { return v < p.x; });
  if (it == points.end()) return points.back().y;
  if (it == points.begin()) return points.front().y;
  return interpolate(*(it - 1), *it, x);
}

Rational inverse_eval_points(const std::vector<Point>& points, const Rational& y) {
  if (y < points.front().y || y > points.back().y)
    throw Error(ErrorCode::domain, "inverse evaluate: " + y.str() + " outside the range [" +
                                       points.front().y.str() + ", " + points.back().y.str() + "]");
  auto it = std::upper_bound(points.begin(), points.end(), y,
                             [](const Rational& v, const Point& p) { return v < p.y; });
  if (it == points.end()) return points.back().x;
  if (it == points.begin()) return points.front().x;
  const Point& a = *(it - 1);
  const Point& b = *it;
  return a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
}

std::vector<Rational> slopes_of(const std::vector<Point>& points) {
  std::vector<Rational> out;
  out.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i)
    out.push_back((points[i].y - points[i - 1].y) / (points[i].x - points[i - 1].x));
  return out;
}

// Breakpoints of f o h over the domain of h: breaks of h plus preimages under
// h of the breaks of f that fall strictly inside the range of h.
std::vector<Point> compose_points(const std::vector<Point>& f, const std::vector<Point>& h) {
  const Rational& lo = h.front().y;
  const Rational& hi = h.back().y;
  std::vector<Rational> pulled;
  for (const Point& p : f)
    if (lo < p.x && p.x < hi) pulled.push_back(inverse_eval_points(h, p.x));
  std::vector<Rational> xs;
  xs.reserve(h.size() + pulled.size());
  for (const Point& p : h) xs.push_back(p.x);
  std::vector<Rational> merged;
  merged.reserve(xs.size() + pulled.size());
  std::merge(xs.begin(), xs.end(), pulled.begin(), pulled.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  std::vector<Point> out;
  out.reserve(merged.size());
  for (Rational& x : merged) {
    Rational y = eval_points(f, eval_points(h, x));
    out.push_back(Point{std::move(x), std::move(y)});
  }
  strip_collinear(out);
  return out;
}

} // namespace

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(kZero <= lo_ && lo_ < hi_ && hi_ <= kOne))
    throw Error(ErrorCode::domain,
                "interval [" + lo_.str() + ", " + hi_.str() + "] must satisfy 0 <= lo < hi <= 1");
}

AffineMap AffineMap::between(const Interval& source, const Interval& target) {
  Rational slope = target.length() / source.length();
  Rational offset = target.lo() - slope * source.lo();
  return AffineMap{source, target, std::move(slope), std::move(offset)};
}

AffineMap affine(const Interval& interval) {
  return AffineMap::between(Interval::unit(), interval);
}

void strip_collinear(std::vector<Point>& points) {
  if (points.size() <= 2) return;
  std::vector<Point> kept;
  kept.reserve(points.size());
  kept.push_back(std::move(points[0]));
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    if (!collinear(kept.back(), points[i], points[i + 1])) kept.push_back(std::move(points[i]));
  }
  kept.push_back(std::move(points.back()));
  points = std::move(kept);
}

Fragment::Fragment(std::vector<Point> points) : points_(std::move(points)) {
  validate_monotone(points_, "fragment");
  strip_collinear(points_);
}

Fragment Fragment::identity_on(const Interval& interval) {
  return Fragment({Point{interval.lo(), interval.lo()}, Point{interval.hi(), interval.hi()}});
}

Rational Fragment::evaluate(const Rational& x) const { return eval_points(points_, x); }

Rational Fragment::inverse_evaluate(const Rational& y) const {
  return inverse_eval_points(points_, y);
}

std::vector<Rational> Fragment::slopes() const { return slopes_of(points_); }

PLHomeo::PLHomeo() : points_{Point{kZero, kZero}, Point{kOne, kOne}} {}

PLHomeo PLHomeo::from_breakpoints(std::vector<Point> points) {
  validate_monotone(points, "breakpoint list");
  validate_unit_ends(points);
  strip_collinear(points);
  return PLHomeo(std::move(points));
}

PLHomeo PLHomeo::from_canonical(std::vector<Point> points) {
  validate_monotone(points, "breakpoint list");
  validate_unit_ends(points);
  for (std::size_t i = 1; i + 1 < points.size(); ++i)
    if (collinear(points[i - 1], points[i], points[i + 1]))
      throw Error(ErrorCode::non_canonical,
                  "breakpoint at index " + std::to_string(i) + " is collinear with its neighbours");
  return PLHomeo(std::move(points));
}

Rational PLHomeo::evaluate(const Rational& x) const { return eval_points(points_, x); }

Rational PLHomeo::inverse_evaluate(const Rational& y) const {
  return inverse_eval_points(points_, y);
}

std::vector<Rational> PLHomeo::slopes() const { return slopes_of(points_); }

Rational PLHomeo::slope_at_zero() const {
  return (points_[1].y - points_[0].y) / (points_[1].x - points_[0].x);
}

Rational PLHomeo::slope_at_one() const {
  const std::size_t n = points_.size();
  return (points_[n - 1].y - points_[n - 2].y) / (points_[n - 1].x - points_[n - 2].x);
}

PLHomeo compose(const PLHomeo& f, const PLHomeo& g) {
  return PLHomeo::from_breakpoints(compose_points(f.breakpoints(), g.breakpoints()));
}

PLHomeo invert(const PLHomeo& f) {
  std::vector<Point> swapped;
  swapped.reserve(f.breakpoints().size());
  for (const Point& p : f.breakpoints()) swapped.push_back(Point{p.y, p.x});
  return PLHomeo::from_breakpoints(std::move(swapped));
}

PLHomeo conjugate(const PLHomeo& h, const PLHomeo& g) { return compose(g, compose(h, invert(g))); }

PLHomeo commutator(const PLHomeo& g, const PLHomeo& f) {
  return compose(compose(g, f), compose(invert(g), invert(f)));
}

PLHomeo power(const PLHomeo& f, long exponent) {
  PLHomeo base = exponent < 0 ? invert(f) : f;
  unsigned long e =
      exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  PLHomeo result;
  while (e > 0) {
    if (e & 1UL) result = compose(base, result);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

Rational s_left(const PLHomeo& f) {
  if (f.is_identity()) return kOne;
  return f.slope_at_zero() == kOne ? f.breakpoints()[1].x : kZero;
}

bool support_within(const PLHomeo& f, const Interval& interval) {
  if (f.evaluate(interval.lo()) != interval.lo() || f.evaluate(interval.hi()) != interval.hi())
    return false;
  for (const Point& p : f.breakpoints()) {
    const bool outside = p.x <= interval.lo() || p.x >= interval.hi();
    if (outside && p.x != p.y) return false;
  }
  return true;
}

EndZones end_zones(const PLHomeo& f) {
  const auto& pts = f.breakpoints();
  const std::size_t n = pts.size();
  return EndZones{Interval(kZero, pts[1].x), Interval(pts[n - 2].x, kOne), f.slope_at_zero(),
                  f.slope_at_one()};
}

PLHomeo embed(const PLHomeo& f, const Interval& interval) {
  const AffineMap phi = affine(interval);
  std::vector<Point> pts;
  pts.reserve(f.breakpoints().size() + 2);
  if (interval.lo() > kZero) pts.push_back(Point{kZero, kZero});
  for (const Point& p : f.breakpoints()) pts.push_back(Point{phi.apply(p.x), phi.apply(p.y)});
  if (interval.hi() < kOne) pts.push_back(Point{kOne, kOne});
  return PLHomeo::from_breakpoints(std::move(pts));
}

PLHomeo extract(const PLHomeo& g, const Interval& interval) {
  if (g.evaluate(interval.lo()) != interval.lo() || g.evaluate(interval.hi()) != interval.hi())
    throw Error(ErrorCode::precondition, "extract: element does not preserve " + interval.str());
  return normalize(restrict_to(g, interval));
}

PLHomeo transport(const PLHomeo& g, const Interval& source, const Interval& target) {
  Fragment piece = restrict_to(g, source);
  if (piece.range() != target)
    throw Error(ErrorCode::precondition, "transport: element maps " + source.str() + " onto " +
                                             piece.range().str() + ", not " + target.str());
  return normalize(piece);
}

PLHomeo transport(const PLHomeo& g, const AffineMap& frame) {
  return transport(g, frame.source, frame.target);
}

Fragment restrict_to(const PLHomeo& f, const Interval& interval) {
  std::vector<Point> pts;
  pts.push_back(Point{interval.lo(), f.evaluate(interval.lo())});
  for (const Point& p : f.breakpoints())
    if (interval.lo() < p.x && p.x < interval.hi()) pts.push_back(p);
  pts.push_back(Point{interval.hi(), f.evaluate(interval.hi())});
  return Fragment(std::move(pts));
}

Fragment compose(const PLHomeo& f, const Fragment& h) {
  return Fragment(compose_points(f.breakpoints(), h.points()));
}

Fragment apply_power(const PLHomeo& f, long exponent, const Fragment& h) {
  if (exponent == 0) return h;
  const PLHomeo step = exponent < 0 ? invert(f) : f;
  Fragment out = h;
  for (long i = 0, n = exponent < 0 ? -exponent : exponent; i < n; ++i) out = compose(step, out);
  return out;
}

PLHomeo normalize(const Fragment& h) {
  const Interval dom = h.domain();
  const Interval ran = h.range();
  const Rational dx = dom.length();
  const Rational dy = ran.length();
  std::vector<Point> pts;
  pts.reserve(h.points().size());
  for (const Point& p : h.points())
    pts.push_back(Point{(p.x - dom.lo()) / dx, (p.y - ran.lo()) / dy});
  return PLHomeo::from_breakpoints(std::move(pts));
}

PLHomeo extend_by_identity(const Fragment& h) {
  if (h.domain() != h.range())
    throw Error(ErrorCode::precondition, "extend_by_identity: fragment maps " + h.domain().str() +
                                             " onto " + h.range().str());
  std::vector<Point> pts;
  pts.reserve(h.points().size() + 2);
  if (h.domain().lo() > kZero) pts.push_back(Point{kZero, kZero});
  pts.insert(pts.end(), h.points().begin(), h.points().end());
  if (h.domain().hi() < kOne) pts.push_back(Point{kOne, kOne});
  return PLHomeo::from_breakpoints(std::move(pts));
}

PLHomeo splice(std::span<const Fragment> pieces) {
  if (pieces.empty()) throw Error(ErrorCode::domain, "splice: no fragments");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& src = pieces[i].points();
    if (i > 0 && pts.back() != src.front())
      throw Error(ErrorCode::domain,
                  "splice: fragment " + std::to_string(i) + " does not continue the previous one");
    pts.insert(pts.end(), src.begin() + (i > 0 ? 1 : 0), src.end());
  }
  return PLHomeo::from_breakpoints(std::move(pts));
}

bool strictly_above_diagonal(const PLHomeo& f) {
  if (f.is_identity()) return false;
  const auto& pts = f.breakpoints();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i)
    if (!(pts[i].y > pts[i].x)) return false;
  return true;
}

OrbitHit orbit_until(const PLHomeo& f, Rational start, const Rational& threshold, long cap) {
  long steps = 0;
  while (start < threshold) {
    if (steps >= cap)
      throw Error(ErrorCode::iteration_cap, "orbit did not reach " + threshold.str() + " within " +
                                                std::to_string(cap) + " steps");
    start = f.evaluate(start);
    ++steps;
  }
  return OrbitHit{std::move(start), steps};
}

Fragment apply_word(std::span<const Letter> word, const Fragment& start) {
  Fragment out = start;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = apply_power(it->element, it->exponent, out);
  return out;
}

PLHomeo word_value(std::span<const Letter> word) {
  PLHomeo out;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = compose(power(it->element, it->exponent), out);
  return out;
}

std::string word_str(std::span<const Letter> word) {
  std::string out;
  for (const Letter& l : word) {
    if (!out.empty()) out += ' ';
    out += l.name + "^" + std::to_string(l.exponent);
  }
  return out;
}

} // namespace plh
