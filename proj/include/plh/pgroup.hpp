#pragma once

#include "plh/thompson.hpp"

namespace plh::pgroup {

/// Fundamental domains I = [a, 2a] and J = [1-2b, 1-b] in the end linear
/// zones of some g, with g^N(I) = J.
struct MonitorPair {
  Interval source = Interval::unit();
  Interval target = Interval::unit();
  long exponent = 0;
};

struct MonitoredInfo {
  MonitorPair pair;
  PLHomeo info; ///< phi_J^{-1} g^N phi_I
};

/// g(x) > x on (0,1), g'(0) = 2, g'(1) = 1/2.
bool is_P11(const PLHomeo& g);

/// Monitors g from I = [basepoint, 2 basepoint]; J is the first image of I
/// inside the right end zone. Requires I inside the left end zone.
MonitoredInfo monitored_info(const PLHomeo& g, const Rational& basepoint);

struct Realized {
  PLHomeo g;
  Rational basepoint;
};

/// g in P_{1,-1} (in P^Q when mode is PQ) whose information monitored from
/// `basepoint` is f. Verified before returning.
Realized realize_info(const PLHomeo& f, const GroupKind& mode = GroupKind::P());

struct ConjugationCheck {
  bool holds = false;
  long shift_depth = 0; ///< steps g^{-1} applied to I (and g to J)
  MonitoredInfo original;
  MonitoredInfo conjugated;
};

/// Shifts the monitoring pair of g at `basepoint` until it lies in the end
/// zones of g1, then compares it with the information of `conjugated`
/// monitored from g1(I). Also checks that `conjugated` carries g1(I) onto
/// g1(J) in the expected number of steps.
ConjugationCheck info_conjugation_invariance(const PLHomeo& g, const PLHomeo& g1,
                                             const PLHomeo& conjugated, const Rational& basepoint);
/// Same with conjugated = conjugate(g, g1).
ConjugationCheck info_conjugation_invariance(const PLHomeo& g, const PLHomeo& g1,
                                             const Rational& basepoint);

/// Element of P with end slopes exactly s0 at 0 and s1 at 1.
PLHomeo realize_end_slopes(const Rational& s0, const Rational& s1);

/// Builds h0^{-N0-n} h2^{-1} h1^{N1+2n} h2 h0^{-n} whose restriction to
/// I0 = [a, 2a] reproduces hatf. h0 must monitor the identity from
/// `basepoint`. In the result, n is the push depth (m is unused).
/// Throws ErrorCode::verification naming the edge if a diagram equality
/// fails, or the letter if PQ-mode membership fails.
WordIdentity word_identity_P(const PLHomeo& hatf, const PLHomeo& h0, const Rational& basepoint,
                             const GroupKind& mode = GroupKind::P());

bool member_PQ(const PLHomeo& f);

/// h0^{m-n} h1 h0^{n-m} (2^{-n}); equals xi 2^{-n} when h0 is 2x on
/// [0, 2^{-n}] and h1 is linear of slope xi on [0, 2^{-m}].
Rational shift_point(const PLHomeo& h0, const PLHomeo& h1, long n, long m);

} // namespace plh::pgroup
