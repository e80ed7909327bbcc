// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff all criteria pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fps/fps.hpp"

using fps::HypergeomParams;
using fps::NamedSeries;
using fps::PropertyVerdict;
using fps::Rational;
using fps::TruncatedPowerSeries;

namespace {

TruncatedPowerSeries from_strings(const std::vector<std::string>& strs) {
  std::vector<Rational> v;
  v.reserve(strs.size());
  for (const auto& s : strs) v.push_back(Rational::parse(s));
  return TruncatedPowerSeries(std::move(v));
}

bool same_series(const TruncatedPowerSeries& actual, const std::vector<std::string>& expected,
                 std::string& detail) {
  const TruncatedPowerSeries want = from_strings(expected);
  if (actual == want) return true;
  detail = "series mismatch: got " + fps::series_to_json(actual).dump();
  return false;
}

// --- criterion bodies ------------------------------------------------------

bool criterion_reciprocal_tables(std::string& detail) {
  return same_series(fps::reciprocal(fps::named_series(NamedSeries::cosh, 10)),
                     {"1", "0", "-1/2", "0", "5/24", "0", "-61/720", "0", "277/8064", "0",
                      "-50521/3628800"},
                     detail) &&
         same_series(fps::reciprocal(fps::named_series(NamedSeries::cos, 10)),
                     {"1", "0", "1/2", "0", "5/24", "0", "61/720", "0", "277/8064", "0",
                      "50521/3628800"},
                     detail) &&
         same_series(fps::reciprocal(fps::named_series(NamedSeries::sinhc, 10)),
                     {"1", "0", "-1/6", "0", "7/360", "0", "-31/15120", "0", "127/604800", "0",
                      "-73/3421440"},
                     detail) &&
         same_series(fps::reciprocal(fps::named_series(NamedSeries::sinc, 10)),
                     {"1", "0", "1/6", "0", "7/360", "0", "31/15120", "0", "127/604800", "0",
                      "73/3421440"},
                     detail);
}

bool criterion_hypergeometric_counterexample(std::string& detail) {
  const HypergeomParams p(Rational(3), Rational(3), Rational(6));
  if (!same_series(fps::reciprocal(fps::gauss_2f1(p, 3)), {"1", "-3/2", "15/28", "-1/56"},
                   detail))
    return false;
  if (fps::hyper2_witness(p) != Rational(15, 28)) {
    detail = "hyper2_witness(3,3,6) = " + fps::hyper2_witness(p).str();
    return false;
  }
  return true;
}

bool criterion_theorem2(std::string& detail) {
  const fps::Theorem2Report r = fps::theorem2_verify(8);
  if (!r.q2_positive) {
    detail = "q2 = " + r.q2.str() + " is not positive";
    return false;
  }
  if (!r.decimals_match_reference) {
    detail = "decimals " + r.r0_decimal + " " + r.r1_decimal + " " + r.q2_decimal;
    return false;
  }
  if (!r.mean_matches_reference) {
    detail = "power mean " + std::to_string(static_cast<double>(r.mean_value));
    return false;
  }
  if (!r.relaxed_condition.verdict.holds) {
    detail = "relaxed condition failed";
    return false;
  }
  return true;
}

bool criterion_rational_power(std::string& detail) {
  const auto f4 = fps::named_series(NamedSeries::f4, 4);
  const auto g = fps::power_rational(f4, Rational(1, 2));
  if (!same_series(g,
                   {"1", "77/160", "18391/51200", "4727893/8192000", "190367203/209715200"},
                   detail))
    return false;
  if (!fps::oracle::power_identity_check(f4, Rational(1, 2), g)) {
    detail = "g^2 != f4 under repeated convolution";
    return false;
  }
  if (!(g[3] * g[3] > g[2] * g[4])) {
    detail = "expected a3^2 > a2*a4 for the square root coefficients";
    return false;
  }
  return true;
}

bool criterion_example_suite(std::string& detail) {
  const auto f1 = [](int n) { return fps::named_series(NamedSeries::f1, n); };
  const auto f2 = [](int n) { return fps::named_series(NamedSeries::f2, n); };
  return same_series(fps::reciprocal(fps::cauchy_product(f1(3), f2(3))),
                     {"1", "-2", "5/12", "-1/6"}, detail) &&
         same_series(fps::reciprocal(fps::quotient(f2(3), f1(3))), {"1", "1", "5/3", "37/12"},
                     detail) &&
         same_series(fps::reciprocal(fps::power_rational(f1(3), Rational(3))),
                     {"1", "-9/2", "6", "-9/4"}, detail) &&
         same_series(fps::reciprocal(fps::power_rational(f2(3), Rational(9, 5))),
                     {"1", "-9/10", "3/100", "-9/1000"}, detail) &&
         same_series(fps::reciprocal(fps::differentiate(f2(3))), {"2", "-8/3", "5/9"}, detail) &&
         same_series(fps::integrate_termwise(f2(4)), {"1", "1/4", "1/9", "1/16", "1/25"},
                     detail) &&
         same_series(fps::reciprocal(fps::named_series(NamedSeries::f5, 3)),
                     {"1", "-1", "1/2", "-1/3"}, detail);
}

bool criterion_kaluza_property_suite(std::string& detail) {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    const auto coeffs = fps::random_log_convex_sequence(rng, 41);  // order 40
    const fps::KaluzaReport report = fps::kaluza_sign_check(TruncatedPowerSeries(coeffs));
    if (!report.holds) {
      detail = "trial " + std::to_string(trial) + " violates at index " +
               std::to_string(*report.first_positive_index);
      return false;
    }
  }
  return true;
}

bool criterion_predicate_grid(std::string& detail) {
  const std::vector<Rational> values = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2),
                                        Rational(4)};
  for (const auto& a : values)
    for (const auto& b : values)
      for (const auto& c : values) {
        const HypergeomParams p(a, b, c);
        const std::string point = "(" + a.str() + "," + b.str() + "," + c.str() + ")";

        if (fps::hyper1_predicate(p).value) {
          const auto series = fps::gauss_2f1(p, 40);
          if (!fps::is_log_convex(series.coeffs()).holds) {
            detail = point + ": predicate true but coefficients not log-convex";
            return false;
          }
          if (!fps::kaluza_sign_check(series).holds) {
            detail = point + ": predicate true but sign check fails";
            return false;
          }
        }

        const Rational witness = fps::hyper2_witness(p);
        const bool inequality =
            Rational(2) * a * b * (c + Rational(1)) > (a + Rational(1)) * (b + Rational(1)) * c;
        if ((witness.sign() > 0) != inequality) {
          detail = point + ": witness sign disagrees with the inequality";
          return false;
        }
        if (witness != fps::reciprocal(fps::gauss_2f1(p, 2))[2]) {
          detail = point + ": closed form differs from the recurrence";
          return false;
        }
      }
  return true;
}

bool criterion_oracle_equivalence(std::string& detail) {
  std::mt19937_64 rng(313131);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = 1 + static_cast<int>(rng() % 12);
    const auto f = fps::rnd::series(rng, order);
    const auto g = fps::rnd::series(rng, order);
    if (fps::reciprocal(g) != fps::oracle::reciprocal_via_linear_solve(g)) {
      detail = "reciprocal mismatch at trial " + std::to_string(trial);
      return false;
    }
    if (fps::quotient(f, g) != fps::oracle::quotient_via_linear_solve(f, g)) {
      detail = "quotient mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

bool criterion_parity(std::string& detail) {
  std::vector<Rational> even_fact, odd_fact;
  for (unsigned m = 0; m <= 5; ++m) {
    even_fact.emplace_back(fps::Integer(1), fps::factorial(2 * m));
    odd_fact.emplace_back(fps::Integer(1), fps::factorial(2 * m + 1));
  }
  if (!fps::parity_reciprocal_check(even_fact, 10).holds) {
    detail = "cosh/cos pair fails";
    return false;
  }
  if (!fps::parity_reciprocal_check(odd_fact, 10).holds) {
    detail = "sinh/sin pair fails";
    return false;
  }
  std::mt19937_64 rng(515151);
  for (int trial = 0; trial < 50; ++trial) {
    const int len = 1 + static_cast<int>(rng() % 15);
    std::vector<Rational> evens;
    for (int i = 0; i < len; ++i) evens.push_back(fps::rnd::positive_rational(rng, 9, 9));
    if (!fps::parity_reciprocal_check(evens, 2 * (len - 1)).holds) {
      detail = "random trial " + std::to_string(trial) + " fails";
      return false;
    }
  }
  return true;
}

bool criterion_quo_equivalence(std::string& detail) {
  std::mt19937_64 rng(616161);
  for (int trial = 0; trial < 200; ++trial) {
    const HypergeomParams numer = fps::rnd::positive_hypergeom_params(rng);
    const HypergeomParams denom = fps::rnd::positive_hypergeom_params(rng);
    const PropertyVerdict v = fps::quo_inequality_exact(numer, denom);

    long first_violation = -1;
    for (long n = 0; n <= 1000; ++n) {
      const Rational rn(n);
      if ((denom.a + rn) * (denom.b + rn) * (numer.c + rn) >
          (numer.a + rn) * (numer.b + rn) * (denom.c + rn)) {
        first_violation = n;
        break;
      }
    }
    if (first_violation >= 0) {
      if (v.holds || *v.witness_index != first_violation) {
        detail = "trial " + std::to_string(trial) + ": window violation at " +
                 std::to_string(first_violation) + " vs verdict";
        return false;
      }
    } else if (!v.holds && *v.witness_index <= 1000) {
      detail = "trial " + std::to_string(trial) + ": verdict witness inside a clean window";
      return false;
    }

    const auto conditions = fps::hyper4_predicate(numer, denom);
    if (conditions.direction == fps::QuotientDirection::increasing &&
        !fps::quo_inequality_exact(numer, denom).holds) {
      detail = "trial " + std::to_string(trial) + ": increasing condition without inequality";
      return false;
    }
    if (conditions.direction == fps::QuotientDirection::decreasing &&
        !fps::quo_inequality_exact(denom, numer).holds) {
      detail = "trial " + std::to_string(trial) + ": decreasing condition without inequality";
      return false;
    }
  }
  return true;
}

bool criterion_mean_properties(std::string& detail) {
  for (int i = 0; i < 20; ++i) {
    const long double a = 0.1L + 9.9L * i / 19.0L;
    for (int j = 0; j < 20; ++j) {
      const long double b = 0.1L + 9.9L * j / 19.0L;
      long double previous = std::sqrt(a * b);
      for (int k = 0; k < 20; ++k) {
        const long double t = 0.05L * (k + 1);
        const long double m = fps::power_mean({a, b, t});
        if (m < previous * (1.0L - 1e-12L)) {
          detail = "monotonicity fails at a=" + std::to_string(static_cast<double>(a)) +
                   " b=" + std::to_string(static_cast<double>(b)) +
                   " t=" + std::to_string(static_cast<double>(t));
          return false;
        }
        if (m < std::sqrt(a * b) * (1.0L - 1e-12L)) {
          detail = "geometric mean bound fails";
          return false;
        }
        previous = m;
      }
    }
  }
  return true;
}

bool criterion_reproduce_paper(std::string& detail) {
  const auto results = fps::repro::run_all();
  if (results.size() < 25) {
    detail = "only " + std::to_string(results.size()) + " tables";
    return false;
  }
  for (const auto& r : results) {
    if (!r.pass) {
      detail = "table " + r.name + ": expected " + r.expected + ", actual " + r.actual;
      return false;
    }
  }
  return true;
}

struct Criterion {
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"exact reciprocal tables (cosh, cos, sinh x/x, sin x/x)", 1.0, criterion_reciprocal_tables},
      {"hypergeometric counterexample (3,3;6)", 1.0, criterion_hypergeometric_counterexample},
      {"sharpness counterexample verifier", 1.0, criterion_theorem2},
      {"rational power golden test [f4]^(1/2)", 1.0, criterion_rational_power},
      {"worked example suite", 2.0, criterion_example_suite},
      {"kaluza property on 100 random log-convex series, order 40", 30.0,
       criterion_kaluza_property_suite},
      {"predicate consistency grid {1/4,1/2,1,2,4}^3, order 40", 60.0, criterion_predicate_grid},
      {"oracle equivalence on 200 random series", 10.0, criterion_oracle_equivalence},
      {"parity property (even/alternating pairs)", 10.0, criterion_parity},
      {"quotient inequality vs window scan, 200 tuples", 30.0, criterion_quo_equivalence},
      {"power mean monotonicity and bounds on a 20^3 grid", 5.0, criterion_mean_properties},
      {"reference table reproduction", 120.0, criterion_reproduce_paper},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.budget_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over budget");
    }
    std::printf("[%s] criterion %2zu: %-58s %7.3fs (budget %gs)\n", ok ? "PASS" : "FAIL", i + 1,
                criterion.label.c_str(), seconds, criterion.budget_seconds);
    if (!ok) {
      std::printf("       %s\n", detail.c_str());
      ++failures;
    }
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria pass\n", criteria.size());
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
