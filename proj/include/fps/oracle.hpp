#ifndef FPS_ORACLE_HPP
#define FPS_ORACLE_HPP

#include <vector>

#include "fps/series.hpp"

// Brute-force cross-validation routines. These deliberately share nothing
// with the fast paths except the Rational and series types: the linear
// solves assemble the full triangular system and run generic forward
// substitution, and the power identity uses its own convolution loop.

namespace fps::oracle {

namespace detail {

// Lower-triangular matrix M[i][j] = b_{i-j} (j <= i) of the convolution
// equations, solved against rhs by forward substitution.
inline std::vector<Rational> solve_convolution_system(const TruncatedPowerSeries& g,
                                                      const std::vector<Rational>& rhs) {
  const std::size_t size = rhs.size();
  std::vector<std::vector<Rational>> matrix(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j <= i; ++j) matrix[i][j] = g[static_cast<int>(i - j)];

  std::vector<Rational> x(size);
  for (std::size_t i = 0; i < size; ++i) {
    Rational acc = rhs[i];
    for (std::size_t j = 0; j < i; ++j) acc -= matrix[i][j] * x[j];
    x[i] = acc / matrix[i][i];
  }
  return x;
}

inline std::vector<Rational> convolve(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    c[n] = acc;
  }
  return c;
}

inline std::vector<Rational> pow_by_convolution(const std::vector<Rational>& base,
                                                unsigned long exponent) {
  std::vector<Rational> result(base.size());
  result[0] = Rational(1);
  for (unsigned long i = 0; i < exponent; ++i) result = convolve(result, base);
  return result;
}

}  // namespace detail

inline TruncatedPowerSeries reciprocal_via_linear_solve(const TruncatedPowerSeries& g) {
  if (g[0].is_zero()) throw precondition_error("non-invertible series: constant term is zero");
  std::vector<Rational> rhs(static_cast<std::size_t>(g.order()) + 1);
  rhs[0] = Rational(1);
  return TruncatedPowerSeries(detail::solve_convolution_system(g, rhs));
}

inline TruncatedPowerSeries quotient_via_linear_solve(const TruncatedPowerSeries& f,
                                                      const TruncatedPowerSeries& g) {
  if (f.order() != g.order())
    throw precondition_error("quotient_via_linear_solve: order mismatch");
  if (g[0].is_zero()) throw precondition_error("non-invertible divisor: constant term is zero");
  std::vector<Rational> rhs(f.coeffs().begin(), f.coeffs().end());
  return TruncatedPowerSeries(detail::solve_convolution_system(g, rhs));
}

/// Whether g^q equals f^p as truncated series, for exponent p/q in lowest
/// terms with q > 0. Uses only repeated convolution (and the triangular
/// solve for negative p), so it validates power_rational independently.
inline bool power_identity_check(const TruncatedPowerSeries& f, const Rational& exponent,
                                 const TruncatedPowerSeries& g) {
  if (f[0] != Rational(1) || g[0] != Rational(1))
    throw precondition_error("power_identity_check: both constant terms must be 1");
  if (f.order() != g.order())
    throw precondition_error("power_identity_check: order mismatch");

  const Integer p = exponent.numerator();
  const Integer q = exponent.denominator();
  const unsigned long q_ul = mpz_get_ui(q.get_mpz_t());
  const unsigned long p_abs = mpz_get_ui(Integer(abs(p)).get_mpz_t());

  const std::vector<Rational> g_coeffs(g.coeffs().begin(), g.coeffs().end());
  std::vector<Rational> f_coeffs(f.coeffs().begin(), f.coeffs().end());
  if (p < 0) {
    const TruncatedPowerSeries inv = reciprocal_via_linear_solve(f);
    f_coeffs.assign(inv.coeffs().begin(), inv.coeffs().end());
  }

  return detail::pow_by_convolution(g_coeffs, q_ul) ==
         detail::pow_by_convolution(f_coeffs, p_abs);
}

}  // namespace fps::oracle

#endif
