#ifndef FPS_SERIES_HPP
#define FPS_SERIES_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fps/rational.hpp"

namespace fps {

/// Maclaurin series truncated at a fixed order N: exactly the coefficients
/// of x^0 .. x^N, all exact rationals. Immutable after construction.
class TruncatedPowerSeries {
 public:
  explicit TruncatedPowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw precondition_error("series needs at least the constant coefficient");
  }

  static TruncatedPowerSeries zero(int order) {
    return TruncatedPowerSeries(std::vector<Rational>(check_order(order) + 1));
  }

  /// The multiplicative unit [1, 0, ..., 0].
  static TruncatedPowerSeries one(int order) {
    std::vector<Rational> c(check_order(order) + 1);
    c[0] = Rational(1);
    return TruncatedPowerSeries(std::move(c));
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Explicit re-truncation. Extending pads with zero coefficients, which
  /// is only meaningful when the caller knows the tail vanishes.
  TruncatedPowerSeries truncated(int new_order) const {
    check_order(new_order);
    std::vector<Rational> c(coeffs_.begin(),
                            coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), new_order + 1));
    c.resize(static_cast<std::size_t>(new_order) + 1);
    return TruncatedPowerSeries(std::move(c));
  }

  friend bool operator==(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw precondition_error("series order must be non-negative");
    return order;
  }

  std::vector<Rational> coeffs_;
};

namespace detail {

inline void require_equal_orders(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g,
                                 const char* op) {
  if (f.order() != g.order())
    throw precondition_error(std::string(op) + ": order mismatch (" + std::to_string(f.order()) +
                             " vs " + std::to_string(g.order()) + "); truncate or extend explicitly");
}

}  // namespace detail

/// alpha*f + beta*g, termwise.
inline TruncatedPowerSeries linear_combine(const Rational& alpha, const TruncatedPowerSeries& f,
                                           const Rational& beta, const TruncatedPowerSeries& g) {
  detail::require_equal_orders(f, g, "linear_combine");
  std::vector<Rational> c(static_cast<std::size_t>(f.order()) + 1);
  for (int n = 0; n <= f.order(); ++n) c[n] = alpha * f[n] + beta * g[n];
  return TruncatedPowerSeries(std::move(c));
}

/// Convolution c_n = sum_{k=0}^{n} a_k b_{n-k}, truncated at the common order.
inline TruncatedPowerSeries cauchy_product(const TruncatedPowerSeries& f,
                                           const TruncatedPowerSeries& g) {
  detail::require_equal_orders(f, g, "cauchy_product");
  const int order = f.order();
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc;
    for (int k = 0; k <= n; ++k) acc += f[k] * g[n - k];
    c[n] = acc;
  }
  return TruncatedPowerSeries(std::move(c));
}

/// Coefficients of 1/g via the triangular recurrence
/// q_0 = 1/b_0, q_n = -(sum_{k=1}^{n} b_k q_{n-k}) / b_0.
inline TruncatedPowerSeries reciprocal(const TruncatedPowerSeries& g) {
  if (g[0].is_zero()) throw precondition_error("non-invertible series: constant term is zero");
  const int order = g.order();
  std::vector<Rational> q(static_cast<std::size_t>(order) + 1);
  q[0] = g[0].reciprocal();
  for (int n = 1; n <= order; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += g[k] * q[n - k];
    q[n] = -acc / g[0];
  }
  return TruncatedPowerSeries(std::move(q));
}

/// Coefficients of f/g via q_n = (a_n - sum_{k=0}^{n-1} q_k b_{n-k}) / b_0.
inline TruncatedPowerSeries quotient(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
  detail::require_equal_orders(f, g, "quotient");
  if (g[0].is_zero()) throw precondition_error("non-invertible divisor: constant term is zero");
  const int order = f.order();
  std::vector<Rational> q(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc = f[n];
    for (int k = 0; k < n; ++k) acc -= q[k] * g[n - k];
    q[n] = acc / g[0];
  }
  return TruncatedPowerSeries(std::move(q));
}

/// Termwise product a_n * b_n.
inline TruncatedPowerSeries hadamard_product(const TruncatedPowerSeries& f,
                                             const TruncatedPowerSeries& g) {
  detail::require_equal_orders(f, g, "hadamard_product");
  std::vector<Rational> c(static_cast<std::size_t>(f.order()) + 1);
  for (int n = 0; n <= f.order(); ++n) c[n] = f[n] * g[n];
  return TruncatedPowerSeries(std::move(c));
}

/// u_n = sum_{k=0}^{n} C(n,k) a_k b_{n-k} with exact binomials.
inline TruncatedPowerSeries binomial_convolution(const TruncatedPowerSeries& f,
                                                 const TruncatedPowerSeries& g) {
  detail::require_equal_orders(f, g, "binomial_convolution");
  const int order = f.order();
  std::vector<Rational> u(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc;
    for (int k = 0; k <= n; ++k)
      acc += Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) *
             f[k] * g[n - k];
    u[n] = acc;
  }
  return TruncatedPowerSeries(std::move(u));
}

/// v_n = sum_{k=0}^{n} (alpha,k)(beta,n-k) / (k! (n-k)!) a_k b_{n-k},
/// with alpha, beta > 0 and alpha + beta = 1.
inline TruncatedPowerSeries davenport_polya_convolution(const TruncatedPowerSeries& f,
                                                        const TruncatedPowerSeries& g,
                                                        const Rational& alpha,
                                                        const Rational& beta) {
  detail::require_equal_orders(f, g, "davenport_polya_convolution");
  if (alpha.sign() <= 0 || beta.sign() <= 0)
    throw precondition_error("davenport_polya_convolution: weights must be positive");
  if (alpha + beta != Rational(1))
    throw precondition_error("davenport_polya_convolution: weights must sum to 1");
  const int order = f.order();

  // Precompute (alpha,k)/k! and (beta,k)/k!.
  std::vector<Rational> wa(static_cast<std::size_t>(order) + 1), wb(wa.size());
  wa[0] = wb[0] = Rational(1);
  for (int k = 1; k <= order; ++k) {
    wa[k] = wa[k - 1] * (alpha + Rational(k - 1)) / Rational(k);
    wb[k] = wb[k - 1] * (beta + Rational(k - 1)) / Rational(k);
  }

  std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc;
    for (int k = 0; k <= n; ++k) acc += wa[k] * wb[n - k] * f[k] * g[n - k];
    v[n] = acc;
  }
  return TruncatedPowerSeries(std::move(v));
}

/// Coefficients of (1/x) * integral of f from 0 to x: a_n / (n+1).
inline TruncatedPowerSeries integrate_termwise(const TruncatedPowerSeries& f) {
  std::vector<Rational> c(static_cast<std::size_t>(f.order()) + 1);
  for (int n = 0; n <= f.order(); ++n) c[n] = f[n] / Rational(n + 1);
  return TruncatedPowerSeries(std::move(c));
}

/// Termwise derivative (n+1) a_{n+1}; the order drops by one because the
/// top coefficient of the derivative is not determined by the truncation.
inline TruncatedPowerSeries differentiate(const TruncatedPowerSeries& f) {
  if (f.order() < 1) throw precondition_error("differentiate: order 0 series has no retained derivative");
  std::vector<Rational> c(static_cast<std::size_t>(f.order()));
  for (int n = 0; n + 1 <= f.order(); ++n) c[n] = Rational(n + 1) * f[n + 1];
  return TruncatedPowerSeries(std::move(c));
}

/// f^alpha for rational alpha via the first-order recurrence obtained from
/// g' f = alpha f' g:  n g_n = sum_{k=1}^{n} ((alpha+1)k - n) f_k g_{n-k}.
/// Requires f_0 = 1 so that g_0 = 1 stays rational.
inline TruncatedPowerSeries power_rational(const TruncatedPowerSeries& f, const Rational& exponent) {
  if (f[0] != Rational(1))
    throw precondition_error("normalize first: power_rational requires constant term exactly 1");
  const int order = f.order();
  std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
  g[0] = Rational(1);
  const Rational ap1 = exponent + Rational(1);
  for (int n = 1; n <= order; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += (ap1 * Rational(k) - Rational(n)) * f[k] * g[n - k];
    g[n] = acc / Rational(n);
  }
  return TruncatedPowerSeries(std::move(g));
}

/// Exact value of the truncated polynomial at x (Horner).
inline Rational evaluate_partial_sum(const TruncatedPowerSeries& f, const Rational& x) {
  Rational acc = f[f.order()];
  for (int n = f.order() - 1; n >= 0; --n) acc = acc * x + f[n];
  return acc;
}

}  // namespace fps

#endif
