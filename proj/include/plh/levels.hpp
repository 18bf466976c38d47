#pragma once

#include <functional>
#include <vector>

#include "plh/plmap.hpp"

/// Orbit and level bookkeeping shared by F (base 2) and P^a (base a):
/// the intervals I_n = [a^{-n-1}, a^{-n}] and J_n = [1-a^{-n}, 1-a^{-n-1}],
/// the return map of g between them, and the chain construction of elements
/// that push a fundamental domain at 0 to a prescribed one at 1.
namespace plh::levels {

Interval source_level(const Rational& a, long n);
Interval target_level(const Rational& a, long n);

/// n >= 1 and g is linear on [0, a^{-n}] and on [1 - a^{-n}, 1].
bool admissible(const PLHomeo& g, const Rational& a, long n);
long min_admissible(const PLHomeo& g, const Rational& a);

struct ReturnMap {
  long n = 0;
  long exponent = 0; ///< N with g^N(I_n) = J_n
  PLHomeo value;     ///< psi_n^{-1} g^N phi_n
};

/// Throws ErrorCode::precondition if n is not admissible or if the orbit of
/// a^{-n-1} steps over 1 - a^{-n}.
ReturnMap return_map(const PLHomeo& g, const Rational& a, long n);

/// Exponent N with g^N(I_n) = J_n.
long level_exponent(const PLHomeo& g, const Rational& a, long n);

/// Smallest power a^{-i}, i >= 1, inside the left end zone of g.
Rational default_start(const PLHomeo& g, const Rational& a);

/// 1 - y, where y is the first forward iterate of `start` inside the right
/// end zone of g.
Rational far_end_gap(const PLHomeo& g, const Rational& start);

using Connector = std::function<Fragment(const Interval&, const Interval&)>;

/// Element equal to a*x on [0, p] and to 1 - (1-x)/a on [c, 1], whose
/// middle maps each [z_i, z_{i+1}] onto [z_{i+1}, z_{i+2}] for the chain
/// z = (p, a p, mids..., c, 1 - (1-c)/a). Requires a p < mids < c < 1.
PLHomeo chain_element(const Rational& a, const Rational& p, const std::vector<Rational>& mids,
                      const Rational& c, const Connector& connect);

/// compose(embed(f, J_n), g): g with its return map at level n
/// post-multiplied by f.
PLHomeo retarget(const PLHomeo& g, const Rational& a, long n, const PLHomeo& f);

} // namespace plh::levels
