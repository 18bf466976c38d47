#pragma once

#include <string>
#include <vector>

#include "plh/levels.hpp"
#include "plh/plmap.hpp"

namespace plh {

enum class GroupTag { F, Pa, PQ, P };

/// Selects one of the groups F, P^a, P^Q, P together with its membership test.
struct GroupKind {
  GroupTag tag = GroupTag::F;
  Rational a = Rational(2); ///< slope base; meaningful for Pa only

  static GroupKind F() { return {GroupTag::F, Rational(2)}; }
  static GroupKind Pa(const Rational& a);
  static GroupKind PQ() { return {GroupTag::PQ, Rational(2)}; }
  static GroupKind P() { return {GroupTag::P, Rational(2)}; }

  std::string name() const;
};

/// Slopes (and for F, breakpoints) satisfy the group's arithmetic condition.
bool member(const GroupKind& kind, const PLHomeo& f);

struct AlphaPair {
  long at0 = 0;
  long at1 = 0;

  std::string str() const { return "(" + std::to_string(at0) + ", " + std::to_string(at1) + ")"; }
  friend AlphaPair operator+(AlphaPair a, AlphaPair b) { return {a.at0 + b.at0, a.at1 + b.at1}; }
  friend bool operator==(const AlphaPair&, const AlphaPair&) = default;
};

/// End-slope exponents in base a; throws ErrorCode::precondition when an end
/// slope is not a power of a.
AlphaPair end_exponents(const PLHomeo& f, const Rational& a);

struct WordIdentity {
  std::vector<Letter> word;
  bool check = false;
  long n = 0; ///< level of the target interval
  long m = 0; ///< level at which the realizer is read
};

namespace thompson {

/// PL bijection source -> target with slopes in 2^Z and dyadic breaks, built
/// by refining both intervals into standard dyadic pieces of equal count.
Fragment dyadic_bridge(const Interval& source, const Interval& target);

AlphaPair alpha(const PLHomeo& f);

/// f in F, alpha(f) = (1, -1) and f(x) > x on (0,1).
bool is_F11(const PLHomeo& f);

/// The odd k with 1 - y = k 2^{-j} for the far-end iterate y of the orbit
/// of 2^{-i} in the left end zone.
mpz_class beta(const PLHomeo& g);
mpz_class beta_from(const PLHomeo& g, const Rational& start);

/// Element of F_{1,-1} with beta = k (k odd, k >= 1).
PLHomeo realize_beta(const mpz_class& k);

/// psi_n^{-1} g^N phi_n at the minimal admissible level.
PLHomeo gamma(const PLHomeo& g);
levels::ReturnMap gamma_at(const PLHomeo& g, long n);

/// Element g1 of F_{1,-1,1} with gamma(g1) = t. The result is checked before
/// it is returned; a failed check throws ErrorCode::verification.
PLHomeo realize_gamma(const PLHomeo& t);

/// Builds the word h0^{m-n} h0^{-N0} h1^{N} h0^{n-m} whose restriction to
/// I_n reproduces hatf, with h1 = realize_gamma(phi_n^{-1} hatf phi_n).
/// Requires hatf in F supported in I_n and gamma_at(h0, n) = id.
WordIdentity word_identity_F(const PLHomeo& hatf, const PLHomeo& h0, long n);

} // namespace thompson
} // namespace plh
