#include "plh/harness.hpp"
#include "plh/json_io.hpp"
#include "plh/pgroup.hpp"

namespace plh::harness {

namespace {

using gen::element;
using gen::element_11;
using gen::uniform;

const Rational kTwo(2);
const Rational kOne(1);

PLHomeo x0() {
  return PLHomeo::from_canonical(
      {{0, 0}, {Rational(1, 2), Rational(1, 4)}, {Rational(3, 4), Rational(1, 2)}, {1, 1}});
}

PLHomeo g_star() { return thompson::realize_beta(mpz_class(1)); }

std::vector<GroupKind> pa_bases() {
  return {GroupKind::Pa(Rational(2)), GroupKind::Pa(Rational(3, 2)), GroupKind::Pa(Rational(5, 3))};
}

std::vector<GroupKind> all_modes() {
  std::vector<GroupKind> out{GroupKind::F()};
  for (const GroupKind& k : pa_bases()) out.push_back(k);
  out.push_back(GroupKind::PQ());
  out.push_back(GroupKind::P());
  return out;
}

Interval random_interval(Rng& rng, bool dyadic) {
  const Rational lo = dyadic
                          ? gen::dyadic_in(rng, Rational(0), kOne) * Rational(uniform(rng, 0, 1))
                          : gen::rational_in(rng, Rational(0), kOne) * Rational(uniform(rng, 0, 1));
  const Rational hi = dyadic ? gen::dyadic_in(rng, lo, kOne) : gen::rational_in(rng, lo, kOne);
  return Interval(lo, hi);
}

bool slopes_in_base(const std::vector<Rational>& slopes, const Rational& a) {
  for (const Rational& s : slopes)
    if (!log_exact(a, s)) return false;
  return true;
}

Case pair_case(Rng& rng, const GroupKind& kind) {
  return Case{}.with("f", element(rng, kind)).with("g", element(rng, kind));
}

// ---------------------------------------------------------------- group axioms

std::vector<Property> group_axioms() {
  std::vector<Property> out;
  for (const GroupKind& kind :
       {GroupKind::F(), GroupKind::Pa(Rational(2)), GroupKind::Pa(Rational(3, 2)),
        GroupKind::Pa(Rational(5, 3)), GroupKind::P()}) {
    const std::string tag = "[" + kind.name() + "]";
    const auto triple = [kind](Rng& rng, long) {
      return Case{}
          .with("f", element(rng, kind))
          .with("g", element(rng, kind))
          .with("h", element(rng, kind));
    };
    out.push_back({"group_axioms/associativity" + tag, triple, [](const Case& c, const Options&) {
                     const PLHomeo &f = c.element("f"), &g = c.element("g"), &h = c.element("h");
                     return Verdict::expect(compose(compose(f, g), h) == compose(f, compose(g, h)),
                                            "(fg)h != f(gh)");
                   }});
    out.push_back({"group_axioms/identity" + tag, triple, [](const Case& c, const Options&) {
                     const PLHomeo& f = c.element("f");
                     const PLHomeo id;
                     return Verdict::expect(compose(f, id) == f && compose(id, f) == f,
                                            "identity is not neutral");
                   }});
    out.push_back({"group_axioms/inverse" + tag, triple, [](const Case& c, const Options&) {
                     const PLHomeo& f = c.element("f");
                     return Verdict::expect(compose(f, invert(f)).is_identity() &&
                                                compose(invert(f), f).is_identity(),
                                            "f f^-1 != id");
                   }});
    out.push_back({"group_axioms/closure" + tag, triple, [kind](const Case& c, const Options&) {
                     const PLHomeo &f = c.element("f"), &g = c.element("g");
                     return Verdict::expect(member(kind, f) && member(kind, compose(f, g)) &&
                                                member(kind, invert(f)),
                                            "left the group");
                   }});
  }

  const auto p_pair = [](Rng& rng, long) {
    return pair_case(rng, GroupKind::P()).with("x", gen::rational_in(rng, Rational(0), kOne, 4096));
  };
  out.push_back({"group_axioms/canonical_form", p_pair, [](const Case& c, const Options&) {
                   const PLHomeo fg = compose(c.element("f"), c.element("g"));
                   const std::vector<Rational> s = fg.slopes();
                   for (std::size_t i = 1; i < s.size(); ++i)
                     if (s[i] == s[i - 1]) return Verdict::fail("collinear interior breakpoint");
                   return Verdict::expect(PLHomeo::from_breakpoints(fg.breakpoints()) == fg &&
                                              PLHomeo::from_canonical(fg.breakpoints()) == fg,
                                          "canonical form is not a fixpoint");
                 }});
  out.push_back({"group_axioms/evaluate_compose", p_pair, [](const Case& c, const Options&) {
                   const PLHomeo &f = c.element("f"), &g = c.element("g");
                   const Rational& x = c.scalar("x");
                   return Verdict::expect(compose(f, g).evaluate(x) == f.evaluate(g.evaluate(x)),
                                          "(f o g)(x) != f(g(x))");
                 }});
  out.push_back({"group_axioms/s_left",
                 [](Rng& rng, long) {
                   const Rational s = gen::rational_in(rng, Rational(0), kOne, 16);
                   return Case{}.with("f", embed(element(rng, GroupKind::P()), Interval(s, kOne)));
                 },
                 [](const Case& c, const Options&) {
                   const PLHomeo& f = c.element("f");
                   const Rational s = s_left(f);
                   bool is_break = s == Rational(0) || s == kOne;
                   for (const Point& p : f.breakpoints()) {
                     if (p.x == s) is_break = true;
                     if (p.x <= s && p.y != p.x) return Verdict::fail("not identity on [0, s]");
                   }
                   if (!is_break) return Verdict::fail("s_left is not a breakpoint");
                   if (s == kOne) return Verdict::pass();
                   Rational next = kOne;
                   for (const Point& p : f.breakpoints())
                     if (p.x > s) {
                       next = p.x;
                       break;
                     }
                   const Rational mid = (s + next) / kTwo;
                   return Verdict::expect(f.evaluate(mid) != mid, "identity beyond s_left");
                 }});
  out.push_back({"group_axioms/transport_composition",
                 [](Rng& rng, long) {
                   return pair_case(rng, GroupKind::P())
                       .with("lo", gen::rational_in(rng, Rational(0), Rational(1, 2)))
                       .with("hi", gen::rational_in(rng, Rational(1, 2), kOne))
                       .with("t", gen::rational_in(rng, Rational(0), kOne, 4096));
                 },
                 [](const Case& c, const Options&) {
                   const PLHomeo &g = c.element("g"), &h = c.element("f");
                   const Interval i(c.scalar("lo"), c.scalar("hi"));
                   const Interval k(h.evaluate(i.lo()), h.evaluate(i.hi()));
                   const Interval j(g.evaluate(k.lo()), g.evaluate(k.hi()));
                   const PLHomeo whole = transport(compose(g, h), i, j);
                   const PLHomeo first = transport(h, i, k);
                   const PLHomeo second = transport(g, k, j);
                   const Rational& t = c.scalar("t");
                   return Verdict::expect(whole.evaluate(t) == second.evaluate(first.evaluate(t)) &&
                                              whole == compose(second, first),
                                          "transport does not compose");
                 }});
  out.push_back({"group_axioms/json_round_trip",
                 [](Rng& rng, long) { return Case{}.with("f", element(rng, GroupKind::P())); },
                 [](const Case& c, const Options&) {
                   const PLHomeo& f = c.element("f");
                   return Verdict::expect(element_from_text(to_json(f).dump()) == f,
                                          "emit/parse is not the identity");
                 }});
  return out;
}

// ----------------------------------------------------------------------- alpha

std::vector<Property> alpha_suite() {
  std::vector<Property> out;
  std::vector<GroupKind> kinds{GroupKind::F()};
  for (const GroupKind& k : pa_bases()) kinds.push_back(k);
  for (const GroupKind& kind : kinds) {
    const std::string tag = "[" + kind.name() + "]";
    const auto gen_pair = [kind](Rng& rng, long) { return pair_case(rng, kind); };
    out.push_back({"alpha/homomorphism" + tag, gen_pair, [kind](const Case& c, const Options&) {
                     const PLHomeo &f = c.element("f"), &g = c.element("g");
                     return Verdict::expect(end_exponents(compose(f, g), kind.a) ==
                                                end_exponents(f, kind.a) + end_exponents(g, kind.a),
                                            "alpha(fg) != alpha(f) + alpha(g)");
                   }});
    out.push_back({"alpha/class_function" + tag, gen_pair, [kind](const Case& c, const Options& o) {
                     const PLHomeo &f = c.element("f"), &g = c.element("g");
                     return Verdict::expect(end_exponents(o.conjugate(f, g), kind.a) ==
                                                end_exponents(f, kind.a),
                                            "alpha(f^g) != alpha(f)");
                   }});
  }
  return out;
}

// ------------------------------------------------------------------ commutator

std::vector<Property> commutator_suite() {
  std::vector<Property> out;
  for (const GroupKind& kind : all_modes()) {
    const std::string tag = "[" + kind.name() + "]";
    const auto gen_pair = [kind](Rng& rng, long) { return pair_case(rng, kind); };
    out.push_back({"commutator/end_slopes" + tag, gen_pair, [kind](const Case& c, const Options&) {
                     const PLHomeo k = commutator(c.element("g"), c.element("f"));
                     return Verdict::expect(k.slope_at_zero() == kOne && k.slope_at_one() == kOne &&
                                                member(kind, k),
                                            "[g,f] has end slopes " + k.slope_at_zero().str() +
                                                ", " + k.slope_at_one().str());
                   }});
    out.push_back(
        {"commutator/conjugate_form" + tag, gen_pair, [](const Case& c, const Options& o) {
           const PLHomeo &f = c.element("f"), &g = c.element("g");
           return Verdict::expect(compose(o.conjugate(f, g), invert(f)) == commutator(g, f),
                                  "f^g f^-1 != [g,f]");
         }});
  }
  return out;
}

// ------------------------------------------------------------------------ beta

// Witness from the invariance argument: the conjugate carries f(y0) along f of
// the g-orbit, and deep in both right zones f only rescales 1 - y by a power
// of two.
Verdict beta_witness(const PLHomeo& g, const PLHomeo& f, const PLHomeo& h) {
  const Rational y0 = levels::default_start(g, kTwo);
  const Rational threshold = std::max(end_zones(g).right.lo(), end_zones(f).right.lo());
  const OrbitHit hit = orbit_until(g, y0, threshold);
  Rational x = f.evaluate(y0);
  for (long i = 0; i < hit.steps; ++i) x = h.evaluate(x);
  if (x != f.evaluate(hit.point)) return Verdict::fail("conjugate does not carry f(y0) to f(y_N)");
  return Verdict::expect(odd_part(kOne - f.evaluate(hit.point)).k == thompson::beta(g),
                         "odd part of the transported gap differs");
}

// Same for gamma: f maps I_n, J_n onto I_{n-j0}, J_{n-j1} when it is linear
// there, so the conjugate's return map between those levels equals gamma(g).
Verdict gamma_witness(const PLHomeo& g, const PLHomeo& f, const PLHomeo& h) {
  const AlphaPair e = thompson::alpha(f);
  const EndZones zf = end_zones(f);
  long n = std::max({levels::min_admissible(g, kTwo), e.at0 + 1, e.at1 + 1});
  while (pow(kTwo, -n) > zf.left.hi() || pow(kTwo, -n) > kOne - zf.right.lo()) ++n;
  const levels::ReturnMap rm = thompson::gamma_at(g, n);
  const Interval source = levels::source_level(kTwo, n - e.at0);
  const Interval target = levels::target_level(kTwo, n - e.at1);
  const Fragment moved = apply_power(h, rm.exponent, Fragment::identity_on(source));
  if (moved.range() != target)
    return Verdict::fail("conjugate does not carry " + source.str() + " onto " + target.str());
  return Verdict::expect(normalize(moved) == rm.value, "transported return map differs");
}

std::vector<Property> beta_suite() {
  std::vector<Property> out;
  out.push_back({"beta/realize_round_trip",
                 [](Rng&, long i) { return Case{}.with("k", Rational(2 * (i % 100) + 1)); },
                 [](const Case& c, const Options&) {
                   const mpz_class k = c.scalar("k").num();
                   const PLHomeo g = thompson::realize_beta(k);
                   return Verdict::expect(thompson::is_F11(g) && thompson::beta(g) == k,
                                          "beta(realize_beta(k)) != k");
                 }});
  out.push_back({"beta/class_invariance",
                 [](Rng& rng, long) {
                   return Case{}
                       .with("g", element_11(rng, GroupKind::F()))
                       .with("f", element(rng, GroupKind::F()));
                 },
                 [](const Case& c, const Options& o) {
                   const PLHomeo &g = c.element("g"), &f = c.element("f");
                   const PLHomeo h = o.conjugate(g, f);
                   if (thompson::beta(h) != thompson::beta(g))
                     return Verdict::fail("beta(g^f) != beta(g)");
                   return beta_witness(g, f, h);
                 }});
  return out;
}

// ----------------------------------------------------------------------- gamma

std::vector<Property> gamma_suite() {
  std::vector<Property> out;
  out.push_back(
      {"gamma/level_independence",
       [](Rng& rng, long) { return Case{}.with("g", element_11(rng, GroupKind::F(), true)); },
       [](const Case& c, const Options&) {
         const PLHomeo& g = c.element("g");
         const long n0 = levels::min_admissible(g, kTwo);
         const PLHomeo first = thompson::gamma_at(g, n0).value;
         for (long n = n0 + 1; n <= n0 + 3; ++n)
           if (thompson::gamma_at(g, n).value != first)
             return Verdict::fail("gamma differs at level " + std::to_string(n));
         return Verdict::pass();
       }});
  out.push_back({"gamma/class_invariance",
                 [](Rng& rng, long) {
                   return Case{}
                       .with("g", element_11(rng, GroupKind::F(), true))
                       .with("f", element(rng, GroupKind::F()));
                 },
                 [](const Case& c, const Options& o) {
                   const PLHomeo &g = c.element("g"), &f = c.element("f");
                   const PLHomeo h = o.conjugate(g, f);
                   if (thompson::gamma(h) != thompson::gamma(g))
                     return Verdict::fail("gamma(g^f) != gamma(g)");
                   return gamma_witness(g, f, h);
                 }});
  out.push_back({"gamma/realize_round_trip",
                 [](Rng& rng, long) { return Case{}.with("t", element(rng, GroupKind::F())); },
                 [](const Case& c, const Options&) {
                   const PLHomeo& t = c.element("t");
                   const PLHomeo g = thompson::realize_gamma(t);
                   return Verdict::expect(thompson::is_F11(g) && thompson::beta(g) == 1 &&
                                              thompson::gamma(g) == t,
                                          "gamma(realize_gamma(t)) != t");
                 }});
  return out;
}

// ---------------------------------------------------------------------- word F

std::vector<Property> word_f_suite() {
  std::vector<Property> out;
  out.push_back(
      {"word_F/identity",
       [](Rng& rng, long i) {
         if (i == 0)
           return Case{}
               .with("hatf", embed(x0(), levels::source_level(kTwo, 2)))
               .with("h0", g_star())
               .with("n", Rational(2));
         PLHomeo h0 = g_star();
         if (uniform(rng, 0, 1) == 1) {
           const PLHomeo g = element_11(rng, GroupKind::F(), true);
           const long n0 = levels::min_admissible(g, kTwo);
           h0 = levels::retarget(g, kTwo, n0, invert(thompson::gamma_at(g, n0).value));
         }
         const long n = levels::min_admissible(h0, kTwo) + uniform(rng, 0, 1);
         return Case{}
             .with("hatf", embed(element(rng, GroupKind::F()), levels::source_level(kTwo, n)))
             .with("h0", h0)
             .with("n", Rational(n));
       },
       [](const Case& c, const Options&) {
         const WordIdentity w =
             thompson::word_identity_F(c.element("hatf"), c.element("h0"), c.integer("n"));
         return Verdict::expect(w.check, "word restricted to I_n != hatf: " + word_str(w.word));
       }});
  out.push_back({"word_F/dyadic_bridge_in_F",
                 [](Rng& rng, long) {
                   const Interval s = random_interval(rng, true);
                   const Interval t = random_interval(rng, true);
                   return Case{}
                       .with("s_lo", s.lo())
                       .with("s_hi", s.hi())
                       .with("t_lo", t.lo())
                       .with("t_hi", t.hi());
                 },
                 [](const Case& c, const Options&) {
                   const Interval s(c.scalar("s_lo"), c.scalar("s_hi"));
                   const Interval t(c.scalar("t_lo"), c.scalar("t_hi"));
                   const Fragment b = thompson::dyadic_bridge(s, t);
                   for (const Point& p : b.points())
                     if (!p.x.is_dyadic() || !p.y.is_dyadic())
                       return Verdict::fail("non-dyadic break");
                   return Verdict::expect(b.domain() == s && b.range() == t &&
                                              slopes_in_base(b.slopes(), kTwo),
                                          "bridge is not an F map between the intervals");
                 }});
  return out;
}

// -------------------------------------------------------------------------- pa

std::vector<Property> pa_suite() {
  std::vector<Property> out;
  for (const GroupKind& kind : pa_bases()) {
    const std::string tag = "[" + kind.a.str() + "]";
    const pa::PaContext ctx(kind.a);
    out.push_back({"pa/connect_slopes" + tag,
                   [](Rng& rng, long) {
                     const Interval s = random_interval(rng, false);
                     const Interval t = random_interval(rng, false);
                     return Case{}
                         .with("s_lo", s.lo())
                         .with("s_hi", s.hi())
                         .with("t_lo", t.lo())
                         .with("t_hi", t.hi());
                   },
                   [ctx](const Case& c, const Options&) {
                     const Interval s(c.scalar("s_lo"), c.scalar("s_hi"));
                     const Interval t(c.scalar("t_lo"), c.scalar("t_hi"));
                     const Fragment b = pa::pa_connect(ctx, s, t);
                     return Verdict::expect(b.domain() == s && b.range() == t &&
                                                slopes_in_base(b.slopes(), ctx.a()),
                                            "connector slope outside a^Z or endpoints moved");
                   }});
    const auto gen_pair = [kind](Rng& rng, long) { return pair_case(rng, kind); };
    out.push_back({"pa/alpha_homomorphism" + tag, gen_pair, [ctx](const Case& c, const Options&) {
                     const PLHomeo &f = c.element("f"), &g = c.element("g");
                     return Verdict::expect(pa::alpha_a(ctx, compose(f, g)) ==
                                                pa::alpha_a(ctx, f) + pa::alpha_a(ctx, g),
                                            "alpha_a is not additive");
                   }});
    out.push_back(
        {"pa/alpha_class_function" + tag, gen_pair, [ctx](const Case& c, const Options& o) {
           const PLHomeo &f = c.element("f"), &g = c.element("g");
           return Verdict::expect(pa::alpha_a(ctx, o.conjugate(f, g)) == pa::alpha_a(ctx, f),
                                  "alpha_a(f^g) != alpha_a(f)");
         }});
    const auto gen_11 = [kind](Rng& rng, long) {
      return Case{}.with("g", element_11(rng, kind)).with("f", element(rng, kind));
    };
    out.push_back(
        {"pa/beta_class_invariance" + tag, gen_11, [ctx](const Case& c, const Options& o) {
           const PLHomeo &g = c.element("g"), &f = c.element("f");
           const Rational xi = pa::beta_a(ctx, g);
           if (!(kOne / ctx.a() < xi && xi <= kOne))
             return Verdict::fail("beta_a outside (1/a, 1]: " + xi.str());
           return Verdict::expect(pa::beta_a(ctx, o.conjugate(g, f)) == xi,
                                  "beta_a(g^f) != beta_a(g)");
         }});
    out.push_back({"pa/beta_realize_grid" + tag,
                   [ctx](Rng&, long i) {
                     const Rational lo = kOne / ctx.a();
                     return Case{}.with("xi", lo + (kOne - lo) * Rational(i % 20 + 1, 20));
                   },
                   [ctx](const Case& c, const Options&) {
                     const Rational& xi = c.scalar("xi");
                     const PLHomeo g = pa::realize_beta_a(ctx, xi);
                     return Verdict::expect(pa::is_Pa11(ctx, g) && pa::beta_a(ctx, g) == xi,
                                            "beta_a(realize_beta_a(xi)) != xi");
                   }});
    const auto gen_111 = [kind](Rng& rng, long) {
      return Case{}.with("g", element_11(rng, kind, true)).with("f", element(rng, kind));
    };
    out.push_back(
        {"pa/gamma_level_independence" + tag, gen_111, [ctx](const Case& c, const Options&) {
           const PLHomeo& g = c.element("g");
           const long n0 = levels::min_admissible(g, ctx.a());
           const PLHomeo first = pa::gamma_a_at(ctx, g, n0).value;
           for (long n = n0 + 1; n <= n0 + 3; ++n)
             if (pa::gamma_a_at(ctx, g, n).value != first)
               return Verdict::fail("gamma_a differs at level " + std::to_string(n));
           return Verdict::pass();
         }});
    out.push_back(
        {"pa/gamma_class_invariance" + tag, gen_111, [ctx](const Case& c, const Options& o) {
           const PLHomeo &g = c.element("g"), &f = c.element("f");
           return Verdict::expect(pa::gamma_a(ctx, o.conjugate(g, f)) == pa::gamma_a(ctx, g),
                                  "gamma_a(g^f) != gamma_a(g)");
         }});
    out.push_back({"pa/gamma_realize" + tag,
                   [kind](Rng& rng, long) { return Case{}.with("t", element(rng, kind)); },
                   [ctx](const Case& c, const Options&) {
                     const PLHomeo& t = c.element("t");
                     return Verdict::expect(pa::gamma_a(ctx, pa::realize_gamma_a(ctx, t)) == t,
                                            "gamma_a(realize_gamma_a(t)) != t");
                   }});
  }
  out.push_back({"pa/base2_coherence",
                 [](Rng& rng, long) { return Case{}.with("g", element_11(rng, GroupKind::F())); },
                 [](const Case& c, const Options&) {
                   const PLHomeo& g = c.element("g");
                   const pa::PaContext two(kTwo);
                   const Rational k = Rational::from_integers(thompson::beta(g), 1);
                   return Verdict::expect(pa::beta_a(two, g) == xi_decompose(kTwo, k).xi,
                                          "beta_a at a=2 disagrees with beta");
                 }});
  return out;
}

// ---------------------------------------------------------------------- pgroup

Case p11_case(Rng& rng) {
  const PLHomeo g = element_11(rng, GroupKind::P());
  return Case{}.with("g", g).with("b", gen::basepoint(rng, g));
}

// Element with identity information at its basepoint: g★ (case 0) or a
// random conjugate of it, monitored from the conjugated basepoint.
Case identity_monitor_case(Rng& rng, long index, const GroupKind& mode) {
  const PLHomeo star = g_star();
  if (index == 0) return Case{}.with("h0", star).with("b", Rational(1, 16));
  const PLHomeo g1 = element(rng, mode);
  const pgroup::ConjugationCheck moved =
      pgroup::info_conjugation_invariance(star, g1, Rational(1, 16));
  return Case{}.with("h0", conjugate(star, g1)).with("b", moved.conjugated.pair.source.lo());
}

Verdict word_p_check(const Case& c, const GroupKind& mode) {
  const WordIdentity w =
      pgroup::word_identity_P(c.element("hatf"), c.element("h0"), c.scalar("b"), mode);
  return Verdict::expect(w.check, "word restricted to I0 != hatf: " + word_str(w.word));
}

Case word_p_case(Rng& rng, long index, const GroupKind& mode) {
  Case c = identity_monitor_case(rng, index, mode);
  const Rational b = c.scalar("b");
  c.with("hatf", embed(element(rng, mode), Interval(b, kTwo * b)));
  return c;
}

std::vector<Property> pgroup_suite() {
  std::vector<Property> out;
  out.push_back({"pgroup/shape_law", [](Rng& rng, long) { return p11_case(rng); },
                 [](const Case& c, const Options&) {
                   const pgroup::MonitoredInfo mi =
                       pgroup::monitored_info(c.element("g"), c.scalar("b"));
                   const Interval& j = mi.pair.target;
                   return Verdict::expect(kOne - j.lo() == kTwo * (kOne - j.hi()),
                                          "1 - x_N != 2 (1 - x_{N+1})");
                 }});
  out.push_back(
      {"pgroup/shift_invariance", [](Rng& rng, long) { return p11_case(rng); },
       [](const Case& c, const Options&) {
         const PLHomeo& g = c.element("g");
         const pgroup::MonitoredInfo mi = pgroup::monitored_info(g, c.scalar("b"));
         const pgroup::MonitoredInfo deeper =
             pgroup::monitored_info(g, g.inverse_evaluate(c.scalar("b")));
         if (deeper.info != mi.info) return Verdict::fail("basepoint shift changed info");
         const Interval i(g.inverse_evaluate(mi.pair.source.lo()),
                          g.inverse_evaluate(mi.pair.source.hi()));
         const Interval j(g.evaluate(mi.pair.target.lo()), g.evaluate(mi.pair.target.hi()));
         const Fragment moved = apply_power(g, mi.pair.exponent + 2, Fragment::identity_on(i));
         return Verdict::expect(moved.range() == j && normalize(moved) == mi.info,
                                "pair shift changed info");
       }});
  out.push_back(
      {"pgroup/golden_monitor",
       [](Rng&, long) { return Case{}.with("g", g_star()).with("b", Rational(1, 16)); },
       [](const Case& c, const Options&) {
         const pgroup::MonitoredInfo mi = pgroup::monitored_info(c.element("g"), c.scalar("b"));
         return Verdict::expect(mi.info.is_identity() && mi.pair.exponent == 3 &&
                                    mi.pair.target == Interval(Rational(1, 2), Rational(3, 4)),
                                "golden monitoring pair differs");
       }});
  out.push_back(
      {"pgroup/realize_info",
       [](Rng& rng, long) { return Case{}.with("f", element(rng, GroupKind::P(), 8, 1L << 16)); },
       [](const Case& c, const Options&) {
         const PLHomeo& f = c.element("f");
         const pgroup::Realized r = pgroup::realize_info(f);
         return Verdict::expect(pgroup::is_P11(r.g) &&
                                    pgroup::monitored_info(r.g, r.basepoint).info == f,
                                "monitored info of the realizer != f");
       }});
  out.push_back(
      {"pgroup/conjugation_invariance",
       [](Rng& rng, long) { return p11_case(rng).with("g1", element(rng, GroupKind::P())); },
       [](const Case& c, const Options& o) {
         const PLHomeo &g = c.element("g"), &g1 = c.element("g1");
         const pgroup::ConjugationCheck r =
             pgroup::info_conjugation_invariance(g, g1, o.conjugate(g, g1), c.scalar("b"));
         return Verdict::expect(r.holds, "information of g^g1 differs (shift depth " +
                                             std::to_string(r.shift_depth) + ")");
       }});
  out.push_back({"pgroup/transitivity",
                 [](Rng& rng, long i) {
                   const long n = uniform(rng, 2, 6);
                   const Rational xi =
                       i % 10 == 0 ? kOne : gen::rational_in(rng, Rational(1, 2), kOne, 4096);
                   return Case{}
                       .with("xi", xi)
                       .with("n", Rational(n))
                       .with("m", Rational(n + uniform(rng, 1, 4)));
                 },
                 [](const Case& c, const Options&) {
                   const Rational& xi = c.scalar("xi");
                   const long n = c.integer("n");
                   const PLHomeo h1 = pgroup::realize_end_slopes(xi, kOne);
                   return Verdict::expect(pgroup::shift_point(g_star(), h1, n, c.integer("m")) ==
                                              xi * pow(kTwo, -n),
                                          "h0^{m-n} h1 h0^{n-m}(2^-n) != xi 2^-n");
                 }});
  return out;
}

std::vector<Property> word_p_suite() {
  std::vector<Property> out;
  for (const GroupKind& mode : {GroupKind::P(), GroupKind::PQ()})
    out.push_back({"word_P/identity[" + mode.name() + "]",
                   [mode](Rng& rng, long i) { return word_p_case(rng, i, mode); },
                   [mode](const Case& c, const Options&) { return word_p_check(c, mode); }});
  return out;
}

std::vector<Property> pq_suite() {
  std::vector<Property> out;
  out.push_back({"pq/realize_info",
                 [](Rng& rng, long) { return Case{}.with("f", element(rng, GroupKind::PQ())); },
                 [](const Case& c, const Options&) {
                   const PLHomeo& f = c.element("f");
                   const pgroup::Realized r = pgroup::realize_info(f, GroupKind::PQ());
                   return Verdict::expect(pgroup::member_PQ(r.g) &&
                                              pgroup::monitored_info(r.g, r.basepoint).info == f,
                                          "P^Q realizer failed");
                 }});
  out.push_back({"pq/closure", [](Rng& rng, long) { return pair_case(rng, GroupKind::PQ()); },
                 [](const Case& c, const Options& o) {
                   const PLHomeo &f = c.element("f"), &g = c.element("g");
                   return Verdict::expect(pgroup::member_PQ(compose(f, g)) &&
                                              pgroup::member_PQ(invert(f)) &&
                                              pgroup::member_PQ(o.conjugate(f, g)),
                                          "left P^Q");
                 }});
  return out;
}

using SuiteFn = std::vector<Property> (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"group_axioms", group_axioms},  {"alpha", alpha_suite},   {"beta", beta_suite},
      {"gamma", gamma_suite},          {"word_F", word_f_suite}, {"pa", pa_suite},
      {"pgroup", pgroup_suite},        {"word_P", word_p_suite}, {"pq", pq_suite},
      {"commutator", commutator_suite}};
  return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<Property> suite_properties(const std::string& suite) {
  if (suite == "all") {
    std::vector<Property> out;
    for (const auto& [name, fn] : registry()) {
      std::vector<Property> part = suite_properties(name);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  for (const auto& [name, fn] : registry())
    if (name == suite) return fn();
  std::string known;
  for (const std::string& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::usage, "unknown suite '" + suite + "' (known: " + known + ")");
}

} // namespace plh::harness
