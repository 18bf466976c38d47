#include "plh/thompson.hpp"

#include <algorithm>

namespace plh {

namespace {

const Rational kTwo(2);

} // namespace

GroupKind GroupKind::Pa(const Rational& a) {
  if (a <= Rational(1)) throw Error(ErrorCode::domain, "P^a requires a > 1, got " + a.str());
  return {GroupTag::Pa, a};
}

std::string GroupKind::name() const {
  switch (tag) {
  case GroupTag::F:
    return "F";
  case GroupTag::Pa:
    return "Pa(" + a.str() + ")";
  case GroupTag::PQ:
    return "PQ";
  case GroupTag::P:
    return "P";
  }
  return "?";
}

bool member(const GroupKind& kind, const PLHomeo& f) {
  switch (kind.tag) {
  case GroupTag::F:
    for (const Point& p : f.breakpoints())
      if (!p.x.is_dyadic() || !p.y.is_dyadic()) return false;
    return std::ranges::all_of(f.slopes(),
                               [](const Rational& s) { return log_exact(kTwo, s).has_value(); });
  case GroupTag::Pa:
    return std::ranges::all_of(f.slopes(),
                               [&](const Rational& s) { return log_exact(kind.a, s).has_value(); });
  case GroupTag::PQ:
  case GroupTag::P:
    // Coordinates are rational by construction.
    return true;
  }
  return false;
}

AlphaPair end_exponents(const PLHomeo& f, const Rational& a) {
  const auto e0 = log_exact(a, f.slope_at_zero());
  const auto e1 = log_exact(a, f.slope_at_one());
  if (!e0 || !e1)
    throw Error(ErrorCode::precondition, "end slopes " + f.slope_at_zero().str() + ", " +
                                             f.slope_at_one().str() + " are not powers of " +
                                             a.str());
  return AlphaPair{*e0, *e1};
}

namespace thompson {

namespace {

// Greedy decomposition of a dyadic interval into maximal standard dyadic pieces.
std::vector<Rational> standard_pieces(const Interval& interval) {
  std::vector<Rational> lengths;
  Rational x = interval.lo();
  while (x < interval.hi()) {
    Rational len = Rational::from_integers(1, x.den()); // x is a multiple of 2^{-e}
    if (len > Rational(1)) len = Rational(1);
    while (x + len > interval.hi()) len /= kTwo;
    x += len;
    lengths.push_back(std::move(len));
  }
  return lengths;
}

void split_largest(std::vector<Rational>& lengths) {
  auto it = std::max_element(lengths.begin(), lengths.end());
  Rational half = *it / kTwo;
  *it = half;
  lengths.insert(it, half);
}

} // namespace

Fragment dyadic_bridge(const Interval& source, const Interval& target) {
  for (const Rational* r : {&source.lo(), &source.hi(), &target.lo(), &target.hi()})
    if (!r->is_dyadic())
      throw Error(ErrorCode::not_dyadic, "dyadic_bridge: endpoint " + r->str() + " is not dyadic");
  std::vector<Rational> from = standard_pieces(source);
  std::vector<Rational> to = standard_pieces(target);
  while (from.size() < to.size()) split_largest(from);
  while (to.size() < from.size()) split_largest(to);

  std::vector<Point> pts{Point{source.lo(), target.lo()}};
  Rational x = source.lo();
  Rational y = target.lo();
  for (std::size_t i = 0; i < from.size(); ++i) {
    x += from[i];
    y += to[i];
    pts.push_back(Point{x, y});
  }
  return Fragment(std::move(pts));
}

AlphaPair alpha(const PLHomeo& f) { return end_exponents(f, kTwo); }

bool is_F11(const PLHomeo& f) {
  if (f.slope_at_zero() != kTwo || f.slope_at_one() != Rational(1, 2)) return false;
  return strictly_above_diagonal(f) && member(GroupKind::F(), f);
}

mpz_class beta_from(const PLHomeo& g, const Rational& start) {
  if (!is_F11(g)) throw Error(ErrorCode::precondition, "beta: element is not in F_{1,-1}");
  return odd_part(levels::far_end_gap(g, start)).k;
}

mpz_class beta(const PLHomeo& g) {
  if (!is_F11(g)) throw Error(ErrorCode::precondition, "beta: element is not in F_{1,-1}");
  return beta_from(g, levels::default_start(g, kTwo));
}

PLHomeo realize_beta(const mpz_class& k) {
  if (k < 1 || mpz_even_p(k.get_mpz_t()))
    throw Error(ErrorCode::domain, "realize_beta: k must be a positive odd integer");
  // Smallest j with 1 - k 2^{-j} > 2^{-j+1}, i.e. 2^j > k + 2.
  long j = 1;
  while (mpz_class(mpz_class(1) << j) <= k + 2) ++j;
  const Rational p = pow(kTwo, -j);
  const Rational c = Rational(1) - Rational::from_integers(k, 1) * p;
  PLHomeo g = levels::chain_element(kTwo, p, {}, c, dyadic_bridge);
  if (!is_F11(g) || beta(g) != k)
    throw Error(ErrorCode::verification, "realize_beta: construction failed for k=" + k.get_str());
  return g;
}

levels::ReturnMap gamma_at(const PLHomeo& g, long n) {
  if (!is_F11(g)) throw Error(ErrorCode::precondition, "gamma: element is not in F_{1,-1}");
  return levels::return_map(g, kTwo, n);
}

PLHomeo gamma(const PLHomeo& g) {
  if (!is_F11(g)) throw Error(ErrorCode::precondition, "gamma: element is not in F_{1,-1}");
  return levels::return_map(g, kTwo, levels::min_admissible(g, kTwo)).value;
}

PLHomeo realize_gamma(const PLHomeo& t) {
  if (!member(GroupKind::F(), t))
    throw Error(ErrorCode::precondition, "realize_gamma: target is not in F");
  const PLHomeo base = realize_beta(mpz_class(1));
  const long n = levels::min_admissible(base, kTwo);
  const PLHomeo base_value = levels::return_map(base, kTwo, n).value;
  const PLHomeo g1 = levels::retarget(base, kTwo, n, compose(t, invert(base_value)));
  if (!is_F11(g1) || beta(g1) != 1 || gamma(g1) != t)
    throw Error(ErrorCode::verification, "realize_gamma: postcondition failed");
  return g1;
}

WordIdentity word_identity_F(const PLHomeo& hatf, const PLHomeo& h0, long n) {
  const Interval source = levels::source_level(kTwo, n);
  if (!member(GroupKind::F(), hatf) || !support_within(hatf, source))
    throw Error(ErrorCode::precondition,
                "word_identity_F: hatf must be in F and supported in " + source.str());
  if (!gamma_at(h0, n).value.is_identity())
    throw Error(ErrorCode::precondition,
                "word_identity_F: h0 must have trivial gamma at level " + std::to_string(n));
  const PLHomeo f = extract(hatf, source);
  const PLHomeo h1 = realize_gamma(f);
  const long m =
      std::max({n + 1, levels::min_admissible(h0, kTwo), levels::min_admissible(h1, kTwo)});
  const long n0 = levels::level_exponent(h0, kTwo, m);
  const long n1 = levels::level_exponent(h1, kTwo, m);

  WordIdentity out;
  out.n = n;
  out.m = m;
  out.word = {Letter{"h0", h0, m - n}, Letter{"h0", h0, -n0}, Letter{"h1", h1, n1},
              Letter{"h0", h0, n - m}};
  const Fragment restricted = apply_word(out.word, Fragment::identity_on(source));
  out.check = restricted.domain() == source && restricted.range() == source &&
              extend_by_identity(restricted) == hatf;
  return out;
}

} // namespace thompson
} // namespace plh
