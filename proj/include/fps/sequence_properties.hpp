#ifndef FPS_SEQUENCE_PROPERTIES_HPP
#define FPS_SEQUENCE_PROPERTIES_HPP

#include <algorithm>
#include <random>
#include <span>
#include <vector>

#include "fps/verdict.hpp"

namespace fps {

namespace detail {

inline void require_positive(std::span<const Rational> seq, const char* message) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i].sign() <= 0) throw precondition_error(message);
}

inline bool violates(const Rational& lhs, const Rational& rhs, bool strict) {
  // checking lhs <= rhs (or < when strict)
  return strict ? !(lhs < rhs) : !(lhs <= rhs);
}

}  // namespace detail

/// a_n^2 <= a_{n-1} a_{n+1} for from_index <= n <= len-2, exact comparisons.
/// Witness values on failure: (a_{n-1}, a_n, a_{n+1}).
inline PropertyVerdict is_log_convex(std::span<const Rational> seq, int from_index = 1,
                                     bool strict = false) {
  detail::require_positive(seq, "log-convexity defined for positive sequences");
  if (seq.size() < 3) throw precondition_error("log-convexity needs at least three entries");
  if (from_index < 1) throw precondition_error("log-convexity index range starts at 1");
  for (std::size_t n = static_cast<std::size_t>(from_index); n + 1 < seq.size(); ++n) {
    if (detail::violates(seq[n] * seq[n], seq[n - 1] * seq[n + 1], strict))
      return PropertyVerdict::fail(static_cast<std::int64_t>(n), seq[n - 1], seq[n], seq[n + 1]);
  }
  return PropertyVerdict::pass();
}

/// Mirror check a_n^2 >= a_{n-1} a_{n+1}.
inline PropertyVerdict is_log_concave(std::span<const Rational> seq, int from_index = 1,
                                      bool strict = false) {
  detail::require_positive(seq, "log-concavity defined for positive sequences");
  if (seq.size() < 3) throw precondition_error("log-concavity needs at least three entries");
  if (from_index < 1) throw precondition_error("log-concavity index range starts at 1");
  for (std::size_t n = static_cast<std::size_t>(from_index); n + 1 < seq.size(); ++n) {
    if (detail::violates(seq[n - 1] * seq[n + 1], seq[n] * seq[n], strict))
      return PropertyVerdict::fail(static_cast<std::int64_t>(n), seq[n - 1], seq[n], seq[n + 1]);
  }
  return PropertyVerdict::pass();
}

/// Non-decreasing up to some peak, then non-increasing. A failing witness n
/// is the first renewed rise after a descent; values (a_{n-1}, a_n, peak).
inline PropertyVerdict is_unimodal(std::span<const Rational> seq) {
  if (seq.empty()) throw precondition_error("unimodality needs at least one entry");
  std::size_t peak = 0;
  bool descending = false;
  for (std::size_t n = 1; n < seq.size(); ++n) {
    if (!descending) {
      if (seq[n - 1] > seq[n]) {
        descending = true;
        peak = n - 1;
      }
    } else if (seq[n - 1] < seq[n]) {
      return PropertyVerdict::fail(static_cast<std::int64_t>(n), seq[n - 1], seq[n], seq[peak]);
    }
  }
  return PropertyVerdict::pass();
}

/// Classification of a positive log-convex sequence. The caller guarantees
/// log-convexity; a sequence matching no class signals that violated
/// precondition. The tie a_0 = a_1 classifies as non-decreasing.
inline ShapeClass classify_shape(std::span<const Rational> seq) {
  detail::require_positive(seq, "shape classification defined for positive sequences");
  if (seq.size() < 2) return ShapeClass::non_decreasing();

  const auto non_decreasing_from = [&](std::size_t k) {
    for (std::size_t n = k + 1; n < seq.size(); ++n)
      if (seq[n - 1] > seq[n]) return false;
    return true;
  };

  if (seq[0] <= seq[1]) {
    if (!non_decreasing_from(0))
      throw precondition_error("shape classification: sequence is not log-convex");
    return ShapeClass::non_decreasing();
  }

  // a_0 > a_1: non-increasing until a first strict rise, if any.
  std::size_t k = 1;
  while (k + 1 < seq.size() && seq[k] >= seq[k + 1]) ++k;
  if (k + 1 == seq.size()) return ShapeClass::non_increasing();
  // seq[k] < seq[k+1]: the rise begins at k.
  if (!non_decreasing_from(k))
    throw precondition_error("shape classification: sequence is not log-convex");
  return ShapeClass::valley_at(static_cast<int>(k));
}

/// Both monotonicity directions of the ratio sequence a_n / b_n, decided by
/// exact cross-multiplication (b_n > 0 required). Witness values at n:
/// (a_n * b_{n+1}, a_{n+1} * b_n, their difference).
struct RatioMonotonicityReport {
  PropertyVerdict non_decreasing;
  PropertyVerdict non_increasing;
};

inline RatioMonotonicityReport ratio_monotonicity(std::span<const Rational> numer,
                                                  std::span<const Rational> denom,
                                                  bool strict = false) {
  if (numer.size() != denom.size())
    throw precondition_error("ratio_monotonicity: sequences must have equal length");
  if (numer.empty()) throw precondition_error("ratio_monotonicity: empty sequences");
  detail::require_positive(denom, "ratio_monotonicity: denominator entries must be positive");

  RatioMonotonicityReport report;
  for (std::size_t n = 0; n + 1 < numer.size(); ++n) {
    const Rational lhs = numer[n] * denom[n + 1];
    const Rational rhs = numer[n + 1] * denom[n];
    if (report.non_decreasing.holds && detail::violates(lhs, rhs, strict))
      report.non_decreasing = PropertyVerdict::fail(static_cast<std::int64_t>(n), lhs, rhs, rhs - lhs);
    if (report.non_increasing.holds && detail::violates(rhs, lhs, strict))
      report.non_increasing = PropertyVerdict::fail(static_cast<std::int64_t>(n), lhs, rhs, rhs - lhs);
  }
  return report;
}

/// Rise-then-fall test for the ratio sequence, with the peak index n0
/// (first index attaining the plateau maximum). Monotone sequences are
/// accepted with the peak at the corresponding end.
struct RatioUnimodalReport {
  PropertyVerdict verdict;
  std::int64_t peak_index = 0;
};

inline RatioUnimodalReport ratio_unimodal(std::span<const Rational> numer,
                                          std::span<const Rational> denom) {
  if (numer.size() != denom.size())
    throw precondition_error("ratio_unimodal: sequences must have equal length");
  if (numer.empty()) throw precondition_error("ratio_unimodal: empty sequences");
  detail::require_positive(denom, "ratio_unimodal: denominator entries must be positive");

  std::vector<Rational> ratios(numer.size());
  for (std::size_t n = 0; n < numer.size(); ++n) ratios[n] = numer[n] / denom[n];

  RatioUnimodalReport report;
  report.verdict = is_unimodal(ratios);
  if (!report.verdict.holds) return report;

  std::size_t peak = 0;
  for (std::size_t n = 1; n < ratios.size(); ++n)
    if (ratios[n] > ratios[peak]) peak = n;
  report.peak_index = static_cast<std::int64_t>(peak);
  return report;
}

/// Backward-difference condition: D q_n >= (q_0/p_0) D p_n for all n >= 1
/// (<= when reversed), where D a_n = a_n - a_{n-1}. Requires p_0 > 0 and a
/// non-increasing p. Witness values at n: (D q_n, (q_0/p_0) D p_n, diff).
inline PropertyVerdict jurkat_condition(std::span<const Rational> q, std::span<const Rational> p,
                                        bool reversed) {
  if (q.size() != p.size())
    throw precondition_error("jurkat_condition: sequences must have equal length");
  if (p.empty()) throw precondition_error("jurkat_condition: empty sequences");
  if (p[0].sign() <= 0) throw precondition_error("jurkat_condition: p0 must be positive");
  for (std::size_t n = 1; n < p.size(); ++n)
    if (p[n - 1] < p[n])
      throw precondition_error("jurkat_condition: p must be non-increasing (rises at index " +
                               std::to_string(n) + ")");

  const Rational scale = q[0] / p[0];
  for (std::size_t n = 1; n < q.size(); ++n) {
    const Rational dq = q[n] - q[n - 1];
    const Rational dp = scale * (p[n] - p[n - 1]);
    const bool bad = reversed ? !(dq <= dp) : !(dq >= dp);
    if (bad) return PropertyVerdict::fail(static_cast<std::int64_t>(n), dq, dp, dq - dp);
  }
  return PropertyVerdict::pass();
}

/// Non-strict (or strict) monotonicity of a plain sequence. Witness values:
/// (a_{n-1}, a_n, a_n - a_{n-1}).
inline PropertyVerdict is_monotone(std::span<const Rational> seq, bool non_increasing,
                                   bool strict = false) {
  if (seq.empty()) throw precondition_error("monotonicity needs at least one entry");
  for (std::size_t n = 1; n < seq.size(); ++n) {
    const bool bad = non_increasing ? detail::violates(seq[n], seq[n - 1], strict)
                                    : detail::violates(seq[n - 1], seq[n], strict);
    if (bad)
      return PropertyVerdict::fail(static_cast<std::int64_t>(n), seq[n - 1], seq[n],
                                   seq[n] - seq[n - 1]);
  }
  return PropertyVerdict::pass();
}

/// Seeded generator of exactly log-convex positive sequences: a_0 is a small
/// positive rational and successive ratios a_{n+1}/a_n are drawn and sorted
/// ascending. Non-decreasing ratios are equivalent to log-convexity, so the
/// result is log-convex by construction. Avoids std distributions so a seed
/// pins the same sequence on every platform.
inline std::vector<Rational> random_log_convex_sequence(std::mt19937_64& rng, int length) {
  if (length < 1) throw precondition_error("sequence length must be positive");
  const auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  std::vector<Rational> ratios;
  ratios.reserve(static_cast<std::size_t>(length) - 1);
  for (int i = 0; i + 1 < length; ++i) ratios.emplace_back(draw(1, 10), draw(1, 10));
  std::sort(ratios.begin(), ratios.end());

  std::vector<Rational> seq;
  seq.reserve(static_cast<std::size_t>(length));
  seq.emplace_back(draw(1, 10), draw(1, 10));
  for (const Rational& r : ratios) seq.push_back(seq.back() * r);
  return seq;
}

}  // namespace fps

#endif
