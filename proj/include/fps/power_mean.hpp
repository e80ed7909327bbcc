#ifndef FPS_POWER_MEAN_HPP
#define FPS_POWER_MEAN_HPP

#include <cmath>
#include <string>
#include <vector>

#include "fps/generators.hpp"
#include "fps/sequence_properties.hpp"
#include "fps/series.hpp"
#include "fps/verdict.hpp"

namespace fps {

/// Inputs of the power mean m(a,b,t) = ((a^t + b^t)/2)^(1/t). This is the
/// one floating-point corner of the toolkit: a^t is irrational for the
/// exponents of interest, so these values are long doubles and every
/// comparison that decides a theorem outcome happens elsewhere in exact
/// arithmetic.
struct MeanParams {
  long double a = 0;
  long double b = 0;
  long double t = 0;
};

inline long double power_mean(const MeanParams& p) {
  if (!(p.a > 0.0L) || !(p.b > 0.0L) || !(p.t > 0.0L))
    throw precondition_error("power_mean: a, b, t must be positive");
  return std::pow((std::pow(p.a, p.t) + std::pow(p.b, p.t)) / 2.0L, 1.0L / p.t);
}

/// Relaxed log-convexity: a_n <= m(a_{n-1}, a_{n+1}, t) + tolerance for
/// 1 <= n <= len-2. The tolerance (absolute) travels with the report since
/// the mean is floating point. Witness values: (a_{n-1}, a_n, a_{n+1}).
struct Kaluza4Report {
  PropertyVerdict verdict;
  long double t = 0;
  long double tolerance = 0;
};

inline Kaluza4Report kaluza4_condition_check(std::span<const Rational> seq, long double t,
                                             long double tolerance = 1e-10L) {
  detail::require_positive(seq, "kaluza4_condition_check: entries must be positive");
  if (!(t > 0.0L)) throw precondition_error("kaluza4_condition_check: t must be positive");
  if (seq.size() < 3)
    throw precondition_error("kaluza4_condition_check: needs at least three entries");
  Kaluza4Report report{PropertyVerdict::pass(), t, tolerance};
  for (std::size_t n = 1; n + 1 < seq.size(); ++n) {
    const long double mean =
        power_mean({seq[n - 1].to_long_double(), seq[n + 1].to_long_double(), t});
    if (seq[n].to_long_double() > mean + tolerance) {
      report.verdict =
          PropertyVerdict::fail(static_cast<std::int64_t>(n), seq[n - 1], seq[n], seq[n + 1]);
      break;
    }
  }
  return report;
}

/// Verifier for the sharpness counterexample q0 + sum x^n/n: the relaxed
/// condition holds for the given t, yet the exact reciprocal has a positive
/// coefficient at x^2. The sign of q2 is decided in rational arithmetic;
/// decimal renderings are exact divisions.
struct Theorem2Report {
  Rational q0;
  Rational t;
  int order = 0;
  Kaluza4Report relaxed_condition;
  TruncatedPowerSeries reciprocal_prefix;
  Rational q2;
  bool q2_positive = false;
  std::string r0_decimal, r1_decimal, q2_decimal;  // 5 significant digits
  long double mean_value = 0;  // m(q0, 1/2, t)
  bool reference_case = false;       // q0 = 1999/1000 and t = 1/100
  bool decimals_match_reference = false;
  bool mean_matches_reference = false;
  bool holds = false;
};

inline Theorem2Report theorem2_verify(int order, const Rational& q0 = Rational(1999, 1000),
                                      const Rational& t = Rational(1, 100),
                                      long double tolerance = 1e-10L) {
  if (order < 4) throw precondition_error("theorem2_verify: order must be at least 4");
  if (q0.sign() <= 0) throw precondition_error("theorem2_verify: q0 must be positive");
  if (t.sign() <= 0) throw precondition_error("theorem2_verify: t must be positive");

  const TruncatedPowerSeries series = constant_plus_log_series(q0, order);
  const long double t_ld = t.to_long_double();

  Theorem2Report report{q0,
                        t,
                        order,
                        kaluza4_condition_check(series.coeffs(), t_ld, tolerance),
                        reciprocal(series),
                        Rational(0),
                        false,
                        {},
                        {},
                        {}};
  report.q2 = report.reciprocal_prefix[2];
  report.q2_positive = report.q2.sign() > 0;
  report.r0_decimal = report.reciprocal_prefix[0].decimal(5);
  report.r1_decimal = report.reciprocal_prefix[1].decimal(5);
  report.q2_decimal = report.q2.decimal(5);
  report.mean_value = power_mean({q0.to_long_double(), 0.5L, t_ld});

  report.reference_case = q0 == Rational(1999, 1000) && t == Rational(1, 100);
  if (report.reference_case) {
    report.decimals_match_reference = report.r0_decimal == "0.50025" &&
                                      report.r1_decimal == "-0.25025" &&
                                      report.q2_decimal == "0.000062594";
    report.mean_matches_reference = std::abs(report.mean_value - 1.00215L) <= 1e-4L;
  }
  report.holds = report.relaxed_condition.verdict.holds && report.q2_positive &&
                 (!report.reference_case ||
                  (report.decimals_match_reference && report.mean_matches_reference));
  return report;
}

}  // namespace fps

#endif
