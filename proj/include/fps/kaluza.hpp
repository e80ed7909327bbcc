#ifndef FPS_KALUZA_HPP
#define FPS_KALUZA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fps/generators.hpp"
#include "fps/sequence_properties.hpp"
#include "fps/series.hpp"

namespace fps {

/// Result of scanning the reciprocal of a series for the Kaluza sign
/// pattern (positive constant term, every later coefficient <= 0). The
/// verdict certifies the checked order only.
struct KaluzaReport {
  bool holds = true;
  std::optional<int> first_positive_index;
  TruncatedPowerSeries reciprocal_prefix;
  int checked_order = 0;
};

inline KaluzaReport kaluza_sign_check(const TruncatedPowerSeries& f) {
  if (f[0].sign() <= 0)
    throw precondition_error("kaluza_sign_check: constant term must be positive");
  TruncatedPowerSeries recip = reciprocal(f);
  for (int n = 1; n <= recip.order(); ++n) {
    if (recip[n].sign() > 0) return {false, n, std::move(recip), f.order()};
  }
  return {true, std::nullopt, std::move(recip), f.order()};
}

/// Boolean predicate outcome plus the list of inequalities that failed.
struct PredicateResult {
  bool value = true;
  std::vector<std::string> reasons;
};

namespace detail {

inline void require_positive_params(const HypergeomParams& p, const char* who) {
  if (p.a.sign() <= 0 || p.b.sign() <= 0 || p.c.sign() <= 0)
    throw precondition_error(std::string(who) + ": parameters must be positive");
}

}  // namespace detail

/// Sufficient (and for the first inequality, necessary) conditions for the
/// 2F1 coefficient sequence to be log-convex:
/// 2ab(c+1) <= (a+1)(b+1)c and c >= a+b-1.
inline PredicateResult hyper1_predicate(const HypergeomParams& p) {
  detail::require_positive_params(p, "hyper1_predicate");
  PredicateResult result;
  const Rational lhs = Rational(2) * p.a * p.b * (p.c + Rational(1));
  const Rational rhs = (p.a + Rational(1)) * (p.b + Rational(1)) * p.c;
  if (!(lhs <= rhs)) {
    result.value = false;
    result.reasons.push_back("2ab(c+1) <= (a+1)(b+1)c fails: " + lhs.str() + " > " + rhs.str());
  }
  if (!(p.c >= p.a + p.b - Rational(1))) {
    result.value = false;
    result.reasons.push_back("c >= a+b-1 fails: " + p.c.str() + " < " + (p.a + p.b - Rational(1)).str());
  }
  return result;
}

/// Closed form of the x^2 coefficient of 1/2F1(a,b;c;x):
/// (ab/c) * (ab/c - (a+1)(b+1)/(2(c+1))). Positive exactly when
/// 2ab(c+1) > (a+1)(b+1)c, so the log-convexity boundary is decidable.
inline Rational hyper2_witness(const HypergeomParams& p) {
  detail::require_positive_params(p, "hyper2_witness");
  const Rational r = p.a * p.b / p.c;
  return r * (r - (p.a + Rational(1)) * (p.b + Rational(1)) / (Rational(2) * (p.c + Rational(1))));
}

/// Conditions under which 1/2F1(a,b;c;x) has all coefficients >= 0:
/// a,b,c > -1, c != 0, ab/c <= 0, c <= a+b-1 and c <= ab.
inline PredicateResult nonneg_reciprocal_predicate(const HypergeomParams& p) {
  if (!(p.a > Rational(-1)) || !(p.b > Rational(-1)) || !(p.c > Rational(-1)) || p.c.is_zero())
    throw precondition_error("nonneg_reciprocal_predicate: needs a,b,c > -1 and c != 0");
  PredicateResult result;
  const Rational ratio = p.a * p.b / p.c;
  if (!(ratio <= Rational(0))) {
    result.value = false;
    result.reasons.push_back("ab/c <= 0 fails: " + ratio.str() + " > 0");
  }
  if (!(p.c <= p.a + p.b - Rational(1))) {
    result.value = false;
    result.reasons.push_back("c <= a+b-1 fails: " + p.c.str() + " > " + (p.a + p.b - Rational(1)).str());
  }
  if (!(p.c <= p.a * p.b)) {
    result.value = false;
    result.reasons.push_back("c <= ab fails: " + p.c.str() + " > " + (p.a * p.b).str());
  }
  return result;
}

/// For a series with a_0 > 0 >= a_1 >= a_2 >= ..., the reciprocal has all
/// coefficients non-negative; this verifies that conclusion up to the
/// truncation order. Trailing zero coefficients are polynomial padding of
/// the truncation (1 - x stored at order 4, say) and are exempt from the
/// monotonicity requirement. Witness values on failure: (b_n, 0, b_n).
inline PropertyVerdict propo_reciprocal_nonneg_check(const TruncatedPowerSeries& f) {
  if (f[0].sign() <= 0)
    throw precondition_error("propo_reciprocal_nonneg_check: a0 must be positive");
  int last = f.order();
  while (last >= 1 && f[last].is_zero()) --last;
  if (last >= 1 && f[1].sign() > 0)
    throw precondition_error("propo_reciprocal_nonneg_check: a1 must be <= 0 (violated at index 1)");
  for (int n = 2; n <= last; ++n)
    if (f[n - 1] < f[n])
      throw precondition_error(
          "propo_reciprocal_nonneg_check: tail must be non-increasing (rises at index " +
          std::to_string(n) + ")");
  const TruncatedPowerSeries recip = reciprocal(f);
  for (int n = 0; n <= recip.order(); ++n)
    if (recip[n].sign() < 0) return PropertyVerdict::fail(n, recip[n], Rational(0), recip[n]);
  return PropertyVerdict::pass();
}

enum class QuotientDirection { increasing, decreasing, none };
enum class Hyper4Condition { cond1, cond2, cond3 };

inline std::string to_string(QuotientDirection d) {
  switch (d) {
    case QuotientDirection::increasing: return "increasing";
    case QuotientDirection::decreasing: return "decreasing";
    case QuotientDirection::none: return "none";
  }
  return "none";
}

inline std::string to_string(Hyper4Condition c) {
  switch (c) {
    case Hyper4Condition::cond1: return "cond1";
    case Hyper4Condition::cond2: return "cond2";
    case Hyper4Condition::cond3: return "cond3";
  }
  return "?";
}

/// Which of the three parameter conditions for monotonicity of
/// 2F1(a1,b1;c1)/2F1(a2,b2;c2) hold, and the implied direction. The
/// decreasing case is the same set of conditions with the two parameter
/// triples exchanged (a per-inequality flip of condition (2) would be too
/// weak: it loses the chain a1 <= a2 <= b2 <= b1 that the product bound
/// needs).
struct Hyper4Conditions {
  HypergeomParams numer, denom;
  std::vector<Hyper4Condition> satisfied;
  QuotientDirection direction = QuotientDirection::none;
};

namespace detail {

inline std::vector<Hyper4Condition> hyper4_forward(const HypergeomParams& n,
                                                   const HypergeomParams& d) {
  std::vector<Hyper4Condition> out;
  if (n.a >= d.a && n.b >= d.b && d.c >= n.c) out.push_back(Hyper4Condition::cond1);
  const bool sums = n.a + n.b >= d.a + d.b;
  const bool cs = d.c >= n.c;
  if (sums && cs && d.a <= n.a && n.a <= n.b && n.b <= d.b) out.push_back(Hyper4Condition::cond2);
  if (sums && cs && n.a * n.b >= d.a * d.b) out.push_back(Hyper4Condition::cond3);
  return out;
}

}  // namespace detail

inline Hyper4Conditions hyper4_predicate(const HypergeomParams& numer,
                                         const HypergeomParams& denom) {
  detail::require_positive_params(numer, "hyper4_predicate");
  detail::require_positive_params(denom, "hyper4_predicate");
  Hyper4Conditions result{numer, denom, {}, QuotientDirection::none};
  result.satisfied = detail::hyper4_forward(numer, denom);
  if (!result.satisfied.empty()) {
    result.direction = QuotientDirection::increasing;
    return result;
  }
  result.satisfied = detail::hyper4_forward(denom, numer);
  if (!result.satisfied.empty()) result.direction = QuotientDirection::decreasing;
  return result;
}

/// Decides (a2+n)(b2+n)(c1+n) <= (a1+n)(b1+n)(c2+n) for every integer
/// n >= 0, exactly. The difference D(n) = rhs - lhs is the quadratic
/// A n^2 + B n + C (the cubic terms cancel), so the decision reduces to a
/// sign analysis of D at 0, at the integers around the vertex, and in the
/// tail. Witness values on failure: (lhs(n), rhs(n), D(n)).
inline PropertyVerdict quo_inequality_exact(const HypergeomParams& numer,
                                            const HypergeomParams& denom) {
  detail::require_positive_params(numer, "quo_inequality_exact");
  detail::require_positive_params(denom, "quo_inequality_exact");
  const Rational &a1 = numer.a, &b1 = numer.b, &c1 = numer.c;
  const Rational &a2 = denom.a, &b2 = denom.b, &c2 = denom.c;

  const Rational A = (a1 + b1 + c2) - (a2 + b2 + c1);
  const Rational B = (a1 * b1 + a1 * c2 + b1 * c2) - (a2 * b2 + a2 * c1 + b2 * c1);
  const Rational C = a1 * b1 * c2 - a2 * b2 * c1;

  const auto D = [&](const Integer& n) {
    const Rational rn{n};
    return (A * rn + B) * rn + C;
  };
  const auto fail_at = [&](const Integer& n) {
    const Rational rn{n};
    const Rational lhs = (a2 + rn) * (b2 + rn) * (c1 + rn);
    const Rational rhs = (a1 + rn) * (b1 + rn) * (c2 + rn);
    return PropertyVerdict::fail(mpz_get_si(n.get_mpz_t()), lhs, rhs, rhs - lhs);
  };

  if (C.sign() < 0) return fail_at(0);

  if (A.is_zero()) {
    if (B.sign() >= 0) return PropertyVerdict::pass();
    // B < 0: first violation at the smallest integer n with Bn + C < 0.
    Integer witness = (-C / B).floor() + 1;
    return fail_at(witness);
  }

  const Rational vertex = -B / (Rational(2) * A);

  if (A.sign() > 0) {
    if (vertex.sign() <= 0) return PropertyVerdict::pass();
    const Integer m1 = vertex.floor();
    const Integer m2 = m1 + 1;
    const bool low_ok = D(m1).sign() >= 0;
    const bool high_ok = D(m2).sign() >= 0;
    if (low_ok && high_ok) return PropertyVerdict::pass();
    if (!low_ok) {
      // D decreases on [0, vertex] and D(0) >= 0: binary search the first
      // negative integer point.
      Integer lo = 0, hi = m1;
      while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        (D(mid).sign() < 0 ? hi : lo) = mid;
      }
      return fail_at(hi);
    }
    return fail_at(m2);
  }

  // A < 0: D(0) >= 0 but the tail is negative. The integers left of the
  // vertex are all non-negative (D increases there), so the first violation
  // sits on the decreasing branch.
  Integer lo = vertex.sign() > 0 ? vertex.floor() : Integer(0);
  if (D(lo).sign() < 0) return fail_at(lo);  // only possible when lo == 0 adjustments fail; keep safe
  Integer hi = lo + 1;
  while (D(hi).sign() >= 0) hi = hi * 2 + 1;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    (D(mid).sign() < 0 ? hi : lo) = mid;
  }
  return fail_at(hi);
}

enum class SignExpectation { non_negative, non_positive };

/// Quotient-coefficient sign check in the sense of the backward-difference
/// criterion: computes k = q/p and verifies k_n >= 0 (or <= 0) for n >= 1.
/// The hypothesis verdict records whether the difference condition held in
/// the matching direction; the corrected non-positive branch additionally
/// requires q to be strictly decreasing.
struct JurkatQuotientReport {
  PropertyVerdict sign;
  PropertyVerdict hypothesis;
  TruncatedPowerSeries quotient_prefix;
};

inline JurkatQuotientReport jurkat_quotient_sign(const TruncatedPowerSeries& q_series,
                                                 const TruncatedPowerSeries& p_series,
                                                 SignExpectation expect) {
  const auto q = q_series.coeffs();
  const auto p = p_series.coeffs();
  if (p.empty() || p[0].sign() <= 0)
    throw precondition_error("jurkat_quotient_sign: p0 must be positive");
  for (std::size_t n = 1; n < p.size(); ++n)
    if (p[n - 1] < p[n])
      throw precondition_error("jurkat_quotient_sign: p must be non-increasing (rises at index " +
                               std::to_string(n) + ")");
  if (expect == SignExpectation::non_positive) {
    const PropertyVerdict dec = is_monotone(q, /*non_increasing=*/true, /*strict=*/true);
    if (!dec.holds)
      throw precondition_error(
          "jurkat_quotient_sign: non-positive expectation requires strictly decreasing q "
          "(violated at index " +
          std::to_string(*dec.witness_index) + ")");
  }

  JurkatQuotientReport report{PropertyVerdict::pass(),
                              jurkat_condition(q, p, expect == SignExpectation::non_positive),
                              quotient(q_series, p_series)};
  const TruncatedPowerSeries& k = report.quotient_prefix;
  for (int n = 1; n <= k.order(); ++n) {
    const bool bad =
        expect == SignExpectation::non_negative ? k[n].sign() < 0 : k[n].sign() > 0;
    if (bad) {
      report.sign = PropertyVerdict::fail(n, k[n], Rational(0), k[n]);
      break;
    }
  }
  return report;
}

/// Coefficient-ratio monotonicity (the hypothesis of the quotient
/// monotonicity criterion) combined with exact sampling of the truncated
/// quotient. Sampling happens on truncations, so agreement is evidence,
/// not proof; the flag `uses_truncations` travels with the report.
struct QuotientMonotonicityReport {
  RatioMonotonicityReport coefficient_ratios;
  std::vector<std::pair<Rational, Rational>> samples;  // (x, partial-sum quotient)
  PropertyVerdict samples_non_decreasing;
  PropertyVerdict samples_non_increasing;
  bool prediction_made = false;
  QuotientDirection predicted = QuotientDirection::none;
  bool agreement = true;
  bool uses_truncations = true;
};

inline QuotientMonotonicityReport quotient_monotone_prediction(
    const TruncatedPowerSeries& numer, const TruncatedPowerSeries& denom,
    std::span<const Rational> sample_points) {
  detail::require_equal_orders(numer, denom, "quotient_monotone_prediction");
  for (int n = 0; n <= denom.order(); ++n)
    if (denom[n].sign() <= 0)
      throw precondition_error(
          "quotient_monotone_prediction: denominator coefficients must be positive");
  for (std::size_t i = 0; i < sample_points.size(); ++i) {
    if (sample_points[i].sign() <= 0 || !(sample_points[i] < Rational(1)))
      throw precondition_error("quotient_monotone_prediction: sample points must lie in (0,1)");
    if (i > 0 && !(sample_points[i - 1] < sample_points[i]))
      throw precondition_error("quotient_monotone_prediction: sample points must be strictly increasing");
  }

  QuotientMonotonicityReport report;
  report.coefficient_ratios = ratio_monotonicity(numer.coeffs(), denom.coeffs());

  std::vector<Rational> values;
  values.reserve(sample_points.size());
  for (const Rational& x : sample_points) {
    Rational v = evaluate_partial_sum(numer, x) / evaluate_partial_sum(denom, x);
    report.samples.emplace_back(x, v);
    values.push_back(std::move(v));
  }
  if (!values.empty()) {
    report.samples_non_decreasing = is_monotone(values, /*non_increasing=*/false);
    report.samples_non_increasing = is_monotone(values, /*non_increasing=*/true);
  }

  if (report.coefficient_ratios.non_decreasing.holds) {
    report.prediction_made = true;
    report.predicted = QuotientDirection::increasing;
    report.agreement = values.empty() || report.samples_non_decreasing.holds;
  } else if (report.coefficient_ratios.non_increasing.holds) {
    report.prediction_made = true;
    report.predicted = QuotientDirection::decreasing;
    report.agreement = values.empty() || report.samples_non_increasing.holds;
  }
  return report;
}

/// Grid search for the turning point of a quotient whose coefficient ratio
/// sequence is unimodal. Approximate by construction: the quotient is
/// sampled from truncations on the caller's grid.
struct TurningPointReport {
  PropertyVerdict grid_unimodal;
  Rational x0;
  std::int64_t grid_index = 0;
  bool flat = false;
  std::vector<std::pair<Rational, Rational>> samples;
};

inline TurningPointReport turning_point_locate(const TruncatedPowerSeries& numer,
                                               const TruncatedPowerSeries& denom,
                                               std::span<const Rational> grid) {
  detail::require_equal_orders(numer, denom, "turning_point_locate");
  const RatioUnimodalReport hypothesis = ratio_unimodal(numer.coeffs(), denom.coeffs());
  if (!hypothesis.verdict.holds)
    throw precondition_error(
        "turning_point_locate: coefficient ratio sequence is not unimodal (violation at index " +
        std::to_string(*hypothesis.verdict.witness_index) + ")");
  if (grid.empty()) throw precondition_error("turning_point_locate: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].sign() <= 0)
      throw precondition_error("turning_point_locate: grid points must be positive");
    if (i > 0 && !(grid[i - 1] < grid[i]))
      throw precondition_error("turning_point_locate: grid points must be strictly increasing");
  }

  TurningPointReport report;
  std::vector<Rational> values;
  values.reserve(grid.size());
  for (const Rational& x : grid) {
    Rational v = evaluate_partial_sum(numer, x) / evaluate_partial_sum(denom, x);
    report.samples.emplace_back(x, v);
    values.push_back(std::move(v));
  }

  report.grid_unimodal = is_unimodal(values);
  std::size_t peak = 0;
  bool all_equal = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[peak]) peak = i;
    if (values[i] != values[0]) all_equal = false;
  }
  report.flat = all_equal;
  report.grid_index = static_cast<std::int64_t>(all_equal ? 0 : peak);
  report.x0 = grid[static_cast<std::size_t>(report.grid_index)];
  return report;
}

/// For f built from a positive even-index coefficient list and g its
/// alternating-sign twin, the reciprocals must have zero odd coefficients
/// and even coefficients equal up to the sign pattern (-1)^n.
inline PropertyVerdict parity_reciprocal_check(std::span<const Rational> even_coeffs, int order) {
  if (order < 0) throw precondition_error("series order must be non-negative");
  detail::require_positive(even_coeffs, "parity_reciprocal_check: even coefficients must be positive");
  const std::size_t needed = static_cast<std::size_t>(order / 2) + 1;
  if (even_coeffs.size() < needed)
    throw precondition_error("parity_reciprocal_check: need " + std::to_string(needed) +
                             " even coefficients for order " + std::to_string(order));

  std::vector<Rational> fc(static_cast<std::size_t>(order) + 1), gc(fc.size());
  for (std::size_t m = 0; 2 * m <= static_cast<std::size_t>(order); ++m) {
    fc[2 * m] = even_coeffs[m];
    gc[2 * m] = (m % 2 == 0) ? even_coeffs[m] : -even_coeffs[m];
  }
  const TruncatedPowerSeries rf = reciprocal(TruncatedPowerSeries(std::move(fc)));
  const TruncatedPowerSeries rg = reciprocal(TruncatedPowerSeries(std::move(gc)));

  for (int n = 0; n <= order; ++n) {
    if (n % 2 == 1) {
      if (!rf[n].is_zero() || !rg[n].is_zero())
        return PropertyVerdict::fail(n, rf[n], rg[n], rf[n] - rg[n]);
    } else {
      const Rational expected = ((n / 2) % 2 == 0) ? rg[n] : -rg[n];
      if (rf[n] != expected) return PropertyVerdict::fail(n, rf[n], rg[n], rf[n] - expected);
    }
  }
  return PropertyVerdict::pass();
}

/// Sign of the quotient coefficients of two hypergeometric series when a
/// ratio-monotonicity condition holds and the denominator passes the
/// log-convexity inequalities. Verifies q_n >= 0 (increasing) or q_n <= 0
/// (decreasing) for 1 <= n <= order.
inline PropertyVerdict combined_theorem_check(const HypergeomParams& numer,
                                              const HypergeomParams& denom, int order) {
  const Hyper4Conditions conditions = hyper4_predicate(numer, denom);
  if (conditions.direction == QuotientDirection::none)
    throw precondition_error("combined_theorem_check: no ratio-monotonicity condition holds");
  const Rational lhs = Rational(2) * denom.a * denom.b * (denom.c + Rational(1));
  const Rational rhs = (denom.a + Rational(1)) * (denom.b + Rational(1)) * denom.c;
  if (!(lhs <= rhs))
    throw precondition_error(
        "combined_theorem_check: denominator fails 2ab(c+1) <= (a+1)(b+1)c (" + lhs.str() + " > " +
        rhs.str() + ")");
  if (!(denom.c >= denom.a + denom.b - Rational(1)))
    throw precondition_error("combined_theorem_check: denominator fails c >= a+b-1");

  const TruncatedPowerSeries q =
      quotient(gauss_2f1(numer, order), gauss_2f1(denom, order));
  for (int n = 1; n <= q.order(); ++n) {
    const bool bad = conditions.direction == QuotientDirection::increasing ? q[n].sign() < 0
                                                                           : q[n].sign() > 0;
    if (bad) return PropertyVerdict::fail(n, q[n], Rational(0), q[n]);
  }
  return PropertyVerdict::pass();
}

}  // namespace fps

#endif
