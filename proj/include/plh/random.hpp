#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "plh/pagroup.hpp"
#include "plh/thompson.hpp"

/// Random elements for the property suites. Every generator is a pure
/// function of the engine state.
namespace plh::gen {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
long uniform(Rng& rng, long lo, long hi);

/// Dyadic rational strictly inside (lo, hi), at most `extra` binary digits
/// finer than the coarsest available. lo and hi must be dyadic.
Rational dyadic_in(Rng& rng, const Rational& lo, const Rational& hi, int extra = 3);

/// Rational strictly inside (lo, hi) of the form lo + (hi - lo) k / d, d <= max_den.
Rational rational_in(Rng& rng, const Rational& lo, const Rational& hi, long max_den = 64);

/// Increasing bijection source -> target with up to `max_points` random
/// interior nodes; nodes are joined by dyadic_bridge, pa_connect or
/// straight segments depending on the group.
Fragment bridge(Rng& rng, const GroupKind& kind, const Interval& source, const Interval& target,
                int max_points = 2);

/// Random element of the group. F and P^a elements come from random
/// bridges of [0,1]; P and P^Q elements from up to `max_breaks` random
/// rational breakpoints with denominators at most `max_den`.
PLHomeo element(Rng& rng, const GroupKind& kind, int max_breaks = 8, long max_den = 64);

/// Random element of F_{1,-1} (P^a_{1,-1}, P_{1,-1}) built as a chain of
/// random bridges. With unit_far_end the orbit of the left zone lands on
/// 1 - a^{-j}, so beta (beta_a) is 1.
PLHomeo element_11(Rng& rng, const GroupKind& kind, bool unit_far_end = false);

/// Basepoint b with [b, 2b] inside the left end zone of g.
Rational basepoint(Rng& rng, const PLHomeo& g);

} // namespace plh::gen
