#ifndef FPS_GENERATORS_HPP
#define FPS_GENERATORS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fps/series.hpp"

namespace fps {

/// Parameter triple of the Gaussian hypergeometric series 2F1(a,b;c;x).
/// c must not be zero or a negative integer, otherwise (c,n) vanishes and
/// the coefficients are undefined. Negative integer a or b is allowed and
/// terminates the series.
struct HypergeomParams {
  Rational a, b, c;

  HypergeomParams(Rational a_, Rational b_, Rational c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (c.is_integer() && c.sign() <= 0)
      throw precondition_error("2F1 undefined: c must not be zero or a negative integer");
  }
};

/// Coefficients alpha_n = (a,n)(b,n) / ((c,n) n!), each computed from the
/// explicit rising-factorial products.
inline TruncatedPowerSeries gauss_2f1(const HypergeomParams& p, int order) {
  if (order < 0) throw precondition_error("series order must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    const Rational denom = pochhammer(p.c, n) * Rational(factorial(static_cast<unsigned long>(n)));
    c[n] = pochhammer(p.a, n) * pochhammer(p.b, n) / denom;
  }
  return TruncatedPowerSeries(std::move(c));
}

/// The built-in example series of the toolkit.
enum class NamedSeries { f1, f2, f3, f4, f5, cosh, cos, sinhc, sinc, thm2q };

inline const std::vector<std::pair<std::string, NamedSeries>>& named_series_table() {
  static const std::vector<std::pair<std::string, NamedSeries>> table = {
      {"f1", NamedSeries::f1},       {"f2", NamedSeries::f2},   {"f3", NamedSeries::f3},
      {"f4", NamedSeries::f4},       {"f5", NamedSeries::f5},   {"cosh", NamedSeries::cosh},
      {"cos", NamedSeries::cos},     {"sinhc", NamedSeries::sinhc},
      {"sinc", NamedSeries::sinc},   {"thm2q", NamedSeries::thm2q},
  };
  return table;
}

inline std::string to_string(NamedSeries s) {
  for (const auto& [name, value] : named_series_table())
    if (value == s) return name;
  throw precondition_error("unknown series");
}

inline NamedSeries named_series_from_string(std::string_view name) {
  for (const auto& [key, value] : named_series_table())
    if (key == name) return value;
  throw parse_error("unknown series name: '" + std::string(name) + "'");
}

/// q0 + sum_{n>=1} x^n / n, i.e. q0 - log(1-x) as a formal series.
inline TruncatedPowerSeries constant_plus_log_series(const Rational& q0, int order) {
  if (order < 0) throw precondition_error("series order must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = q0;
  for (int n = 1; n <= order; ++n) c[n] = Rational(1, n);
  return TruncatedPowerSeries(std::move(c));
}

inline TruncatedPowerSeries named_series(NamedSeries which, int order) {
  if (order < 0) throw precondition_error("series order must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  switch (which) {
    case NamedSeries::f1:
      // (2^n + 1) / 2
      for (int n = 0; n <= order; ++n) c[n] = Rational(Integer(Integer(1) << n) + 1, Integer(2));
      break;
    case NamedSeries::f2:
      // -log(1-x)/x = 2F1(1,1;2;x): 1/(n+1)
      for (int n = 0; n <= order; ++n) c[n] = Rational(1, n + 1);
      break;
    case NamedSeries::f3:
      return gauss_2f1(HypergeomParams(Rational(1, 2), Rational(1, 2), Rational(1)), order);
    case NamedSeries::f4:
      // listed head, then the tail rule (2^(n-2) + 1) / 2 from n = 6 on
      {
        const Rational head[] = {Rational(1),    Rational(77, 80), Rational(19, 20),
                                 Rational(3, 2), Rational(5, 2),   Rational(9, 2)};
        for (int n = 0; n <= order; ++n) {
          if (n < 6)
            c[n] = head[n];
          else
            c[n] = Rational(Integer(Integer(1) << (n - 2)) + 1, Integer(2));
        }
      }
      break;
    case NamedSeries::f5:
      // 1 + sum_{n>=1} x^n / n
      return constant_plus_log_series(Rational(1), order);
    case NamedSeries::cosh:
      for (int n = 0; n <= order; n += 2) c[n] = Rational(Integer(1), factorial(static_cast<unsigned long>(n)));
      break;
    case NamedSeries::cos:
      for (int n = 0; n <= order; n += 2) {
        c[n] = Rational(Integer(1), factorial(static_cast<unsigned long>(n)));
        if ((n / 2) % 2 == 1) c[n] = -c[n];
      }
      break;
    case NamedSeries::sinhc:
      // sinh(x)/x: 1/(2m+1)! at x^(2m)
      for (int n = 0; n <= order; n += 2) c[n] = Rational(Integer(1), factorial(static_cast<unsigned long>(n) + 1));
      break;
    case NamedSeries::sinc:
      for (int n = 0; n <= order; n += 2) {
        c[n] = Rational(Integer(1), factorial(static_cast<unsigned long>(n) + 1));
        if ((n / 2) % 2 == 1) c[n] = -c[n];
      }
      break;
    case NamedSeries::thm2q:
      return constant_plus_log_series(Rational(1999, 1000), order);
  }
  return TruncatedPowerSeries(std::move(c));
}

}  // namespace fps

#endif
