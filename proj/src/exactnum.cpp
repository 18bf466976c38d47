#include "plh/exactnum.hpp"

#include <cctype>
#include <cmath>

namespace plh {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

long bit_length_minus_one(const mpz_class& power_of_two) {
  return static_cast<long>(mpz_sizeinbase(power_of_two.get_mpz_t(), 2)) - 1;
}

} // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::division_by_zero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_integers(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::division_by_zero, "rational with zero denominator");
  return Rational(mpq_class(num, den));
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_part = body.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part))
    throw Error(ErrorCode::parse, "malformed rational \"" + std::string(text) + "\"");
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0)
    throw Error(ErrorCode::division_by_zero,
                "rational \"" + std::string(text) + "\" has zero denominator");
  if (negative) num = -num;
  return from_integers(num, den);
}

bool Rational::is_dyadic() const { return mpz_popcount(value_.get_den_mpz_t()) == 1; }

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class a = ::abs(value_.get_num());
  const mpz_class b = value_.get_den();
  const mpz_class q = (2 * a * scale + b) / (2 * b);
  const mpz_class int_part = q / scale;
  std::string out = (value_ < 0 && q != 0) ? "-" : "";
  out += int_part.get_str();
  if (digits > 0) {
    std::string frac = mpz_class(q % scale).get_str();
    out += '.';
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (sgn(rhs.value_) == 0) throw Error(ErrorCode::division_by_zero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (base.sign() == 0) throw Error(ErrorCode::division_by_zero, "zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  return Rational::from_integers(n, d);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::optional<long> log_exact(const Rational& base, const Rational& value) {
  if (base <= Rational(1)) throw Error(ErrorCode::domain, "log_exact requires base > 1");
  if (value.sign() <= 0) return std::nullopt;
  if (value == Rational(1)) return 0L;
  if (value < Rational(1)) {
    const auto n = log_exact(base, Rational(1) / value);
    if (!n) return std::nullopt;
    return -*n;
  }
  // base = p/q reduced with p > q >= 1, so p >= 2; value = s/t must be (p^n, q^n).
  const mpz_class p = base.num();
  const mpz_class q = base.den();
  mpz_class s = value.num();
  long n = 0;
  while (mpz_divisible_p(s.get_mpz_t(), p.get_mpz_t())) {
    s /= p;
    ++n;
  }
  if (s != 1) return std::nullopt;
  mpz_class qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
  if (qn != value.den()) return std::nullopt;
  return n;
}

OddPart odd_part(const Rational& value) {
  if (value.sign() <= 0) throw Error(ErrorCode::domain, "odd_part requires a positive value");
  if (!value.is_dyadic())
    throw Error(ErrorCode::not_dyadic, "odd_part: " + value.str() + " is not dyadic");
  mpz_class num = value.num();
  const auto twos = static_cast<long>(mpz_scan1(num.get_mpz_t(), 0));
  mpz_class k;
  mpz_fdiv_q_2exp(k.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(twos));
  return OddPart{k, bit_length_minus_one(value.den()) - twos};
}

double log2_estimate(const Rational& value) {
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, value.raw().get_num_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, value.raw().get_den_mpz_t());
  return std::log2(std::fabs(num_mant)) + static_cast<double>(num_exp) - std::log2(den_mant) -
         static_cast<double>(den_exp);
}

XiDecomposition xi_decompose(const Rational& a, const Rational& value) {
  if (a <= Rational(1)) throw Error(ErrorCode::domain, "xi_decompose requires a > 1");
  if (value.sign() <= 0) throw Error(ErrorCode::domain, "xi_decompose requires value > 0");
  const Rational inv_a = Rational(1) / a;
  // Float estimate of j, then exact correction on both sides.
  long j = static_cast<long>(std::ceil(-log2_estimate(value) / log2_estimate(a)));
  Rational q = value * pow(a, j);
  while (q > Rational(1)) {
    q /= a;
    --j;
  }
  while (q <= inv_a) {
    q *= a;
    ++j;
  }
  return XiDecomposition{q, j};
}

namespace {

Rational floor_of(const Rational& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return Rational::from_integers(f, 1);
}

Rational simplest_open(const Rational& lo, const std::optional<Rational>& hi) {
  const Rational f = floor_of(lo);
  const Rational candidate = f + Rational(1);
  if (!hi || candidate < *hi) return candidate;
  const Rational inner_lo = Rational(1) / (*hi - f);
  if (lo == f) return f + Rational(1) / simplest_open(inner_lo, std::nullopt);
  return f + Rational(1) / simplest_open(inner_lo, Rational(1) / (lo - f));
}

} // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::domain, "simplest_between requires lo < hi");
  return simplest_open(lo, hi);
}

} // namespace plh
