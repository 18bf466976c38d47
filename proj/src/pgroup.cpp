#include "plh/pgroup.hpp"

namespace plh::pgroup {

namespace {

const Rational kTwo(2);
const Rational kHalf(1, 2);
// Basepoint used by realize_info: [1/16, 1/8] lies in the slope-2 zone of the base element.
const Rational kRealizerBasepoint(1, 16);
constexpr long kShiftCap = 100'000;

Interval image(const PLHomeo& g, long exponent, const Interval& interval) {
  return apply_power(g, exponent, Fragment::identity_on(interval)).range();
}

void require_edge(bool holds, const std::string& edge) {
  if (!holds) throw Error(ErrorCode::verification, "diagram edge failed: " + edge);
}

} // namespace

bool is_P11(const PLHomeo& g) {
  return g.slope_at_zero() == kTwo && g.slope_at_one() == kHalf && strictly_above_diagonal(g);
}

MonitoredInfo monitored_info(const PLHomeo& g, const Rational& basepoint) {
  if (!is_P11(g))
    throw Error(ErrorCode::precondition, "monitored_info: element is not in P_{1,-1}");
  const EndZones zones = end_zones(g);
  if (!(basepoint > Rational(0) && kTwo * basepoint <= zones.left.hi()))
    throw Error(ErrorCode::precondition,
                "monitored_info: [" + basepoint.str() + ", " + (kTwo * basepoint).str() +
                    "] is not inside the left end zone " + zones.left.str());
  const Interval source(basepoint, kTwo * basepoint);
  const OrbitHit hit = orbit_until(g, basepoint, zones.right.lo());
  const Interval target(hit.point, g.evaluate(hit.point));
  const Fragment piece = apply_power(g, hit.steps, Fragment::identity_on(source));
  if (piece.range() != target)
    throw Error(ErrorCode::verification,
                "monitored_info: orbit of " + source.str() + " does not land on " + target.str());
  return MonitoredInfo{MonitorPair{source, target, hit.steps}, normalize(piece)};
}

Realized realize_info(const PLHomeo& f, const GroupKind& mode) {
  if (mode.tag != GroupTag::P && mode.tag != GroupTag::PQ)
    throw Error(ErrorCode::usage, "realize_info: mode must be P or PQ, got " + mode.name());
  const PLHomeo base = thompson::realize_beta(mpz_class(1));
  const MonitoredInfo m0 = monitored_info(base, kRealizerBasepoint);
  const PLHomeo g1 = compose(embed(compose(f, invert(m0.info)), m0.pair.target), base);
  if (!is_P11(g1) || !member(mode, g1) || monitored_info(g1, kRealizerBasepoint).info != f)
    throw Error(ErrorCode::verification, "realize_info: postcondition failed");
  return Realized{g1, kRealizerBasepoint};
}

ConjugationCheck info_conjugation_invariance(const PLHomeo& g, const PLHomeo& g1,
                                             const PLHomeo& conjugated, const Rational& basepoint) {
  ConjugationCheck out;
  out.original = monitored_info(g, basepoint);
  const EndZones outer = end_zones(g1);

  // Slide the pair along the orbit of g until g1 is linear on both ends of it.
  Rational a = basepoint;
  Interval target = out.original.pair.target;
  while (!(kTwo * kTwo * a <= outer.left.hi() && outer.right.lo() <= target.lo())) {
    if (++out.shift_depth > kShiftCap)
      throw Error(ErrorCode::iteration_cap, "info_conjugation_invariance: shift did not settle");
    a = g.inverse_evaluate(a);
    target = image(g, 1, target);
  }
  out.conjugated = monitored_info(conjugated, g1.evaluate(a));
  // The transported pair must be a monitoring pair of the conjugate as well.
  const Interval moved_source = image(g1, 1, Interval(a, kTwo * a));
  const long steps = out.original.pair.exponent + 2 * out.shift_depth;
  const bool edge = image(conjugated, steps, moved_source) == image(g1, 1, target);
  out.holds = edge && out.conjugated.info == out.original.info;
  return out;
}

ConjugationCheck info_conjugation_invariance(const PLHomeo& g, const PLHomeo& g1,
                                             const Rational& basepoint) {
  return info_conjugation_invariance(g, g1, conjugate(g, g1), basepoint);
}

PLHomeo realize_end_slopes(const Rational& s0, const Rational& s1) {
  if (s0 <= Rational(0) || s1 <= Rational(0))
    throw Error(ErrorCode::domain, "realize_end_slopes: slopes must be positive");
  const Rational quarter(1, 4);
  const Rational p = std::min(quarter, quarter / s0);
  const Rational q = std::min(quarter, quarter / s1);
  return PLHomeo::from_breakpoints({Point{Rational(0), Rational(0)}, Point{p, s0 * p},
                                    Point{Rational(1) - q, Rational(1) - s1 * q},
                                    Point{Rational(1), Rational(1)}});
}

WordIdentity word_identity_P(const PLHomeo& hatf, const PLHomeo& h0, const Rational& basepoint,
                             const GroupKind& mode) {
  const MonitoredInfo m0 = monitored_info(h0, basepoint);
  if (!m0.info.is_identity())
    throw Error(ErrorCode::precondition, "word_identity_P: h0 must monitor the identity");
  const Interval& i0 = m0.pair.source;
  const Interval& j0 = m0.pair.target;
  if (!member(mode, hatf) || !support_within(hatf, i0))
    throw Error(ErrorCode::precondition, "word_identity_P: hatf must be in " + mode.name() +
                                             " and supported in " + i0.str());

  const Realized r = realize_info(extract(hatf, i0), mode);
  const PLHomeo& h1 = r.g;
  const MonitoredInfo m1 = monitored_info(h1, r.basepoint);
  const Interval& i1 = m1.pair.source;
  const Interval& j1 = m1.pair.target;
  const PLHomeo h2 =
      realize_end_slopes(i1.lo() / i0.lo(), (Rational(1) - j1.hi()) / (Rational(1) - j0.hi()));

  const EndZones zones = end_zones(h2);
  long n = 0;
  while (!(zones.left.contains(image(h0, -n, i0)) && zones.right.contains(image(h0, n, j0)))) {
    if (++n > kShiftCap) throw Error(ErrorCode::iteration_cap, "word_identity_P: push diverged");
  }
  require_edge(image(h0, m0.pair.exponent, i0) == j0, "h0^N0(I0) = J0");
  require_edge(image(h1, m1.pair.exponent, i1) == j1, "h1^N1(I1) = J1");
  require_edge(image(h2, 1, image(h0, -n, i0)) == image(h1, -n, i1), "h2(h0^-n(I0)) = h1^-n(I1)");
  require_edge(image(h2, 1, image(h0, n, j0)) == image(h1, n, j1), "h2(h0^n(J0)) = h1^n(J1)");

  WordIdentity out;
  out.n = n;
  out.word = {Letter{"h0", h0, -m0.pair.exponent - n}, Letter{"h2", h2, -1},
              Letter{"h1", h1, m1.pair.exponent + 2 * n}, Letter{"h2", h2, 1},
              Letter{"h0", h0, -n}};
  if (mode.tag == GroupTag::PQ)
    for (const Letter& letter : out.word)
      if (!member_PQ(letter.element))
        throw Error(ErrorCode::verification,
                    "word_identity_P: letter " + letter.name + " is not in P^Q");
  const Fragment restricted = apply_word(out.word, Fragment::identity_on(i0));
  out.check = restricted.domain() == i0 && restricted.range() == i0 &&
              extend_by_identity(restricted) == hatf;
  return out;
}

bool member_PQ(const PLHomeo& f) { return member(GroupKind::PQ(), f); }

Rational shift_point(const PLHomeo& h0, const PLHomeo& h1, long n, long m) {
  const Rational x = pow(kTwo, -n);
  const Rational y = power(h0, n - m).evaluate(x);
  return power(h0, m - n).evaluate(h1.evaluate(y));
}

} // namespace plh::pgroup
