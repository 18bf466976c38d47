#pragma once

#include <span>
#include <string>
#include <vector>

#include "plh/exactnum.hpp"

namespace plh {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Closed interval [lo, hi] with 0 <= lo < hi <= 1.
class Interval {
public:
  Interval(Rational lo, Rational hi);

  static Interval unit() { return Interval(Rational(0), Rational(1)); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational length() const { return hi_ - lo_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

  friend bool operator==(const Interval&, const Interval&) = default;

private:
  Rational lo_;
  Rational hi_;
};

/// Orientation-preserving affine bijection source -> target, t |-> slope*t + offset.
struct AffineMap {
  Interval source;
  Interval target;
  Rational slope;
  Rational offset;

  static AffineMap between(const Interval& source, const Interval& target);

  Rational apply(const Rational& t) const { return slope * t + offset; }
  Rational unapply(const Rational& y) const { return (y - offset) / slope; }
};

/// The affine map [0,1] -> I.
AffineMap affine(const Interval& interval);

/// Removes interior points collinear with their neighbours.
void strip_collinear(std::vector<Point>& points);

/// An increasing PL bijection between two subintervals of [0,1], given by
/// its breakpoints. Used for restrictions, orbit pieces and splicing.
class Fragment {
public:
  explicit Fragment(std::vector<Point> points);

  /// The identity on `interval`.
  static Fragment identity_on(const Interval& interval);

  const std::vector<Point>& points() const { return points_; }
  Interval domain() const { return Interval(points_.front().x, points_.back().x); }
  Interval range() const { return Interval(points_.front().y, points_.back().y); }

  Rational evaluate(const Rational& x) const;
  Rational inverse_evaluate(const Rational& y) const;
  std::vector<Rational> slopes() const;

  friend bool operator==(const Fragment&, const Fragment&) = default;

private:
  std::vector<Point> points_;
};

/// Element of P: an orientation-preserving PL homeomorphism of [0,1] held as
/// its canonical breakpoint list. Structural equality is group equality.
class PLHomeo {
public:
  PLHomeo();

  static PLHomeo identity() { return PLHomeo(); }
  /// Validates and canonicalizes.
  static PLHomeo from_breakpoints(std::vector<Point> points);
  /// Validates and rejects any non-canonical input, naming the offending index.
  static PLHomeo from_canonical(std::vector<Point> points);

  const std::vector<Point>& breakpoints() const { return points_; }
  std::size_t interior_breaks() const { return points_.size() - 2; }
  bool is_identity() const { return points_.size() == 2; }

  Rational evaluate(const Rational& x) const;
  Rational inverse_evaluate(const Rational& y) const;
  std::vector<Rational> slopes() const;
  Rational slope_at_zero() const;
  Rational slope_at_one() const;

  Fragment as_fragment() const { return Fragment(points_); }

  friend bool operator==(const PLHomeo&, const PLHomeo&) = default;

private:
  explicit PLHomeo(std::vector<Point> points) : points_(std::move(points)) {}

  std::vector<Point> points_;
};

PLHomeo compose(const PLHomeo& f, const PLHomeo& g); // f o g
PLHomeo invert(const PLHomeo& f);
/// h^g = g h g^{-1}.
PLHomeo conjugate(const PLHomeo& h, const PLHomeo& g);
/// [g, f] = g f g^{-1} f^{-1}.
PLHomeo commutator(const PLHomeo& g, const PLHomeo& f);
PLHomeo power(const PLHomeo& f, long exponent);

/// sup { s | f = id on [0, s] }.
Rational s_left(const PLHomeo& f);
bool support_within(const PLHomeo& f, const Interval& interval);

struct EndZones {
  Interval left;
  Interval right;
  Rational slope0;
  Rational slope1;
};

/// Maximal end linear zones [0, e0] and [1 - e1, 1] with their slopes.
EndZones end_zones(const PLHomeo& f);

/// phi_I o f o phi_I^{-1} on I, identity elsewhere.
PLHomeo embed(const PLHomeo& f, const Interval& interval);
/// phi_I^{-1} o g|_I o phi_I; requires g(I) = I.
PLHomeo extract(const PLHomeo& g, const Interval& interval);
/// psi_J^{-1} o g|_I o phi_I; requires g(I) = J.
PLHomeo transport(const PLHomeo& g, const Interval& source, const Interval& target);
PLHomeo transport(const PLHomeo& g, const AffineMap& frame);

Fragment restrict_to(const PLHomeo& f, const Interval& interval);
/// f o h on the domain of h.
Fragment compose(const PLHomeo& f, const Fragment& h);
/// f^exponent o h on the domain of h.
Fragment apply_power(const PLHomeo& f, long exponent, const Fragment& h);
/// Rescales domain and range of a fragment to [0,1].
PLHomeo normalize(const Fragment& h);
/// The fragment on its domain, identity elsewhere; requires domain == range.
PLHomeo extend_by_identity(const Fragment& h);
/// Joins fragments with contiguous domains and ranges covering [0,1].
PLHomeo splice(std::span<const Fragment> pieces);

/// f(x) > x for every x in (0,1).
bool strictly_above_diagonal(const PLHomeo& f);

inline constexpr long kIterationCap = 1'000'000;

struct OrbitHit {
  Rational point;
  long steps = 0;
};

/// Iterates x <- f(x) from `start` until x >= threshold. Throws
/// ErrorCode::iteration_cap after `cap` steps.
OrbitHit orbit_until(const PLHomeo& f, Rational start, const Rational& threshold,
                     long cap = kIterationCap);

/// One letter element^exponent of a group word.
struct Letter {
  std::string name;
  PLHomeo element;
  long exponent = 0;
};

/// The word w = l_0 l_1 ... l_k (l_k applied first) acting on a fragment.
Fragment apply_word(std::span<const Letter> word, const Fragment& start);
/// The word as a group element.
PLHomeo word_value(std::span<const Letter> word);
std::string word_str(std::span<const Letter> word);

} // namespace plh
