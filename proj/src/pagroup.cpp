#include "plh/pagroup.hpp"

namespace plh::pa {

PaContext::PaContext(Rational a) : a_(std::move(a)) {
  if (a_ <= Rational(1)) throw Error(ErrorCode::domain, "base a must exceed 1, got " + a_.str());
}

Fragment pa_connect(const PaContext& ctx, const Interval& source, const Interval& target) {
  const Rational& a = ctx.a();
  const Rational sigma = target.length() / source.length();
  // The lines meet inside the open rectangle iff a^{-m} < sigma < a^n.
  long n = 1;
  Rational steep = a;
  while (steep <= sigma) {
    steep *= a;
    ++n;
  }
  Rational shallow = Rational(1) / a;
  while (shallow >= sigma) shallow /= a;

  const Rational dx = source.length() * (sigma - shallow) / (steep - shallow);
  const Rational x = source.lo() + dx;
  const Rational y = target.lo() + steep * dx;
  return Fragment({Point{source.lo(), target.lo()}, Point{x, y}, Point{source.hi(), target.hi()}});
}

AlphaPair alpha_a(const PaContext& ctx, const PLHomeo& f) { return end_exponents(f, ctx.a()); }

bool is_Pa11(const PaContext& ctx, const PLHomeo& f) {
  if (f.slope_at_zero() != ctx.a() || f.slope_at_one() != Rational(1) / ctx.a()) return false;
  return strictly_above_diagonal(f) && member(ctx.kind(), f);
}

Rational beta_a_from(const PaContext& ctx, const PLHomeo& g, const Rational& start) {
  if (!is_Pa11(ctx, g))
    throw Error(ErrorCode::precondition, "beta_a: element is not in P^a_{1,-1}");
  return xi_decompose(ctx.a(), levels::far_end_gap(g, start)).xi;
}

Rational beta_a(const PaContext& ctx, const PLHomeo& g) {
  return beta_a_from(ctx, g, levels::default_start(g, ctx.a()));
}

levels::ReturnMap gamma_a_at(const PaContext& ctx, const PLHomeo& g, long n) {
  if (!is_Pa11(ctx, g))
    throw Error(ErrorCode::precondition, "gamma_a: element is not in P^a_{1,-1}");
  return levels::return_map(g, ctx.a(), n);
}

PLHomeo gamma_a(const PaContext& ctx, const PLHomeo& g) {
  if (!is_Pa11(ctx, g))
    throw Error(ErrorCode::precondition, "gamma_a: element is not in P^a_{1,-1}");
  return levels::return_map(g, ctx.a(), levels::min_admissible(g, ctx.a())).value;
}

PLHomeo realize_beta_a(const PaContext& ctx, const Rational& xi) {
  const Rational& a = ctx.a();
  if (!(Rational(1) / a < xi && xi <= Rational(1)))
    throw Error(ErrorCode::domain, "realize_beta_a: xi must lie in (1/a, 1], got " + xi.str());
  // Smallest j with 1 - xi a^{-j} > a^{-j+1}.
  long j = 1;
  while (!(Rational(1) - xi * pow(a, -j) > pow(a, 1 - j))) ++j;
  const Rational p = pow(a, -j);
  const auto connect = [&ctx](const Interval& s, const Interval& t) {
    return pa_connect(ctx, s, t);
  };
  PLHomeo g = levels::chain_element(a, p, {}, Rational(1) - xi * p, connect);
  if (!is_Pa11(ctx, g) || beta_a(ctx, g) != xi)
    throw Error(ErrorCode::verification, "realize_beta_a: construction failed for xi=" + xi.str());
  return g;
}

PLHomeo realize_gamma_a(const PaContext& ctx, const PLHomeo& t) {
  if (!member(ctx.kind(), t))
    throw Error(ErrorCode::precondition, "realize_gamma_a: target is not in P^a");
  const PLHomeo base = realize_beta_a(ctx, Rational(1));
  const long n = levels::min_admissible(base, ctx.a());
  const PLHomeo base_value = levels::return_map(base, ctx.a(), n).value;
  const PLHomeo g1 = levels::retarget(base, ctx.a(), n, compose(t, invert(base_value)));
  if (!is_Pa11(ctx, g1) || beta_a(ctx, g1) != Rational(1) || gamma_a(ctx, g1) != t)
    throw Error(ErrorCode::verification, "realize_gamma_a: postcondition failed");
  return g1;
}

} // namespace plh::pa
