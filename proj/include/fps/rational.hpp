#ifndef FPS_RATIONAL_HPP
#define FPS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "fps/errors.hpp"

namespace fps {

using Integer = mpz_class;

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. Every constructor and operator
/// re-canonicalizes, so equality is plain value comparison.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n, 1) {}
  Rational(long n) : v_(n, 1) {}
  explicit Rational(const Integer& n) : v_(n) {}

  Rational(long num, long den) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  Rational(Integer num, Integer den) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
  }

  /// Parses "p", "-p" or "p/q" with q > 0. The sign belongs to the
  /// numerator; the value is reduced after parsing. Decimal notation is
  /// rejected so exactness is never silently lost.
  static Rational parse(std::string_view s) {
    const auto fail = [&] {
      throw parse_error("not a rational: '" + std::string(s) + "' (expected p or p/q with q > 0)");
    };
    if (s.empty()) fail();
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
    if (digits == 0) fail();
    // mpz_set_str rejects a leading '+'
    std::string num(s.substr(s[0] == '+' ? 1 : 0, s[0] == '+' ? i - 1 : i));
    std::string den = "1";
    if (i < s.size()) {
      if (s[i] != '/') fail();
      ++i;
      std::size_t j = i;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      if (j == i || j != s.size()) fail();
      den = std::string(s.substr(i));
    }
    Integer n(num), d(den);
    if (d == 0) fail();
    return Rational(std::move(n), std::move(d));
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
  }

  Rational reciprocal() const {
    if (is_zero()) throw precondition_error("reciprocal of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  /// Integer floor of the value.
  Integer floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  /// Exact integer power; negative exponents invert (zero base rejected).
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? reciprocal() : *this;
    const unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.v_.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.v_.get_den_mpz_t(), k);
    Rational r;
    r.v_ = mpq_class(n, d);  // already canonical: powers of coprime integers stay coprime
    return r;
  }

  double to_double() const { return v_.get_d(); }

  /// Conversion for the floating-point mean module. Numerator and
  /// denominator are each rounded to double before the division, which
  /// keeps the relative error below ~1e-15 for the magnitudes used here.
  long double to_long_double() const {
    return static_cast<long double>(v_.get_num().get_d()) /
           static_cast<long double>(v_.get_den().get_d());
  }

  /// Canonical textual form: "p/q" or bare "p"; numerator carries the sign.
  std::string str() const { return v_.get_str(); }

  /// Renders the exact value as a plain decimal with the given number of
  /// significant digits, rounding half away from zero. Falls back to
  /// scientific notation only for extreme magnitudes.
  std::string decimal(int significant) const;

  friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw precondition_error("division by zero");
    return wrap(a.v_ / b.v_);
  }
  Rational operator-() const { return wrap(-v_); }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw precondition_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational wrap(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  mpq_class v_;  // invariant: canonical (mpq arithmetic preserves this)
};

namespace detail {

inline Integer pow10(unsigned long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return p;
}

}  // namespace detail

inline std::string Rational::decimal(int significant) const {
  if (significant < 1) throw precondition_error("decimal rendering needs at least one digit");
  if (is_zero()) return "0";
  const bool negative = sign() < 0;
  const Integer n = ::abs(v_.get_num());
  const Integer d = v_.get_den();

  // Decimal exponent e with 10^e <= n/d < 10^(e+1).
  const auto at_least_pow10 = [&](long k) {
    if (k >= 0) return n >= d * detail::pow10(static_cast<unsigned long>(k));
    return n * detail::pow10(static_cast<unsigned long>(-k)) >= d;
  };
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
  while (!at_least_pow10(e)) --e;
  while (at_least_pow10(e + 1)) ++e;

  const long shift = significant - 1 - e;
  const Integer num = shift >= 0 ? Integer(n * detail::pow10(static_cast<unsigned long>(shift))) : n;
  const Integer den = shift >= 0 ? d : Integer(d * detail::pow10(static_cast<unsigned long>(-shift)));
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) ++q;

  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) > significant) {
    // rounding carried into an extra digit (e.g. 999 -> 1000)
    ++e;
    digits.pop_back();
  }

  std::string out;
  if (e >= -9 && e <= 17) {
    if (e >= 0) {
      if (e + 1 >= static_cast<long>(digits.size())) {
        out = digits + std::string(e + 1 - digits.size(), '0');
      } else {
        out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
      }
    } else {
      out = "0." + std::string(-e - 1, '0') + digits;
    }
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
  }
  return negative ? "-" + out : out;
}

/// Rising factorial (a)(a+1)...(a+n-1); empty product for n = 0.
inline Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw precondition_error("pochhammer needs a non-negative count");
  Rational result(1);
  Rational factor = a;
  for (long k = 0; k < n; ++k) {
    result *= factor;
    factor += Rational(1);
  }
  return result;
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace fps

#endif
