#pragma once

#include "plh/levels.hpp"
#include "plh/thompson.hpp"

namespace plh::pa {

/// The slope base of P^a, a rational a > 1.
class PaContext {
public:
  explicit PaContext(Rational a);

  const Rational& a() const { return a_; }
  GroupKind kind() const { return GroupKind::Pa(a_); }

private:
  Rational a_;
};

/// Two-segment map I -> J through the intersection of the line of slope a^n
/// through (p, r) and the line of slope a^{-m} through (q, s), with n, m >= 1
/// minimal.
Fragment pa_connect(const PaContext& ctx, const Interval& source, const Interval& target);

AlphaPair alpha_a(const PaContext& ctx, const PLHomeo& f);

/// f in P^a, alpha_a(f) = (1, -1), f(x) > x on (0,1).
bool is_Pa11(const PaContext& ctx, const PLHomeo& f);

/// xi in (a^{-1}, 1] with 1 - y = xi a^{-j} for the far-end iterate y.
Rational beta_a(const PaContext& ctx, const PLHomeo& g);
Rational beta_a_from(const PaContext& ctx, const PLHomeo& g, const Rational& start);

PLHomeo gamma_a(const PaContext& ctx, const PLHomeo& g);
levels::ReturnMap gamma_a_at(const PaContext& ctx, const PLHomeo& g, long n);

PLHomeo realize_beta_a(const PaContext& ctx, const Rational& xi);
PLHomeo realize_gamma_a(const PaContext& ctx, const PLHomeo& t);

} // namespace plh::pa
