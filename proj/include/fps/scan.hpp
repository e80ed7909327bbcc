#ifndef FPS_SCAN_HPP
#define FPS_SCAN_HPP

#include <atomic>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fps/generators.hpp"
#include "fps/kaluza.hpp"

// Grid scans for Kaluza sign violations. Grid points are independent;
// workers pull indices from a shared counter and write into a pre-sized
// result vector, so the output order is the grid order regardless of
// scheduling.

namespace fps::scan {

namespace detail {

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs < 1) jobs = 1;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), count ? count : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

struct HyperScanRow {
  Rational a, b, c;
  bool hyper1 = false;
  Rational hyper2_witness;
  bool holds = false;
  std::optional<int> witness_index;
  std::optional<Rational> witness_value;
};

/// Cross product values^3 as (a,b,c); each point records the log-convexity
/// predicate, the closed-form x^2 reciprocal coefficient, and the sign scan
/// of the reciprocal to the given order.
inline std::vector<HyperScanRow> scan_hyper(std::span<const Rational> values, int order,
                                            int jobs = 1) {
  for (const Rational& v : values)
    if (v.sign() <= 0) throw precondition_error("scan hyper: grid values must be positive");
  const std::size_t k = values.size();
  std::vector<HyperScanRow> rows(k * k * k);
  detail::parallel_for(rows.size(), jobs, [&](std::size_t idx) {
    const Rational& a = values[idx / (k * k)];
    const Rational& b = values[(idx / k) % k];
    const Rational& c = values[idx % k];
    const HypergeomParams params(a, b, c);
    HyperScanRow row{a, b, c, hyper1_predicate(params).value, hyper2_witness(params),
                     false,   {}, {}};
    const KaluzaReport report = kaluza_sign_check(gauss_2f1(params, order));
    row.holds = report.holds;
    if (!report.holds) {
      row.witness_index = report.first_positive_index;
      row.witness_value = report.reciprocal_prefix[*report.first_positive_index];
    }
    rows[idx] = std::move(row);
  });
  return rows;
}

struct PowerScanRow {
  NamedSeries series = NamedSeries::f1;
  Rational alpha;
  bool holds = false;
  std::optional<int> witness_index;
  std::optional<Rational> witness_value;
};

/// Kaluza sign scan of [f(x)]^alpha over the given named series and
/// exponent grid.
inline std::vector<PowerScanRow> scan_power(std::span<const NamedSeries> series,
                                            std::span<const Rational> alphas, int order,
                                            int jobs = 1) {
  std::vector<PowerScanRow> rows(series.size() * alphas.size());
  detail::parallel_for(rows.size(), jobs, [&](std::size_t idx) {
    const NamedSeries which = series[idx / alphas.size()];
    const Rational& alpha = alphas[idx % alphas.size()];
    PowerScanRow row{which, alpha, false, {}, {}};
    const KaluzaReport report =
        kaluza_sign_check(power_rational(named_series(which, order), alpha));
    row.holds = report.holds;
    if (!report.holds) {
      row.witness_index = report.first_positive_index;
      row.witness_value = report.reciprocal_prefix[*report.first_positive_index];
    }
    rows[idx] = std::move(row);
  });
  return rows;
}

/// Default exponent grid (k+1)/20 for k = 0..19, i.e. 0.05 steps up to 1.
inline std::vector<Rational> default_alpha_grid() {
  std::vector<Rational> alphas;
  alphas.reserve(20);
  for (int k = 0; k < 20; ++k) alphas.emplace_back(k + 1, 20);
  return alphas;
}

inline std::string to_csv(const std::vector<HyperScanRow>& rows) {
  std::ostringstream out;
  out << "a,b,c,hyper1,hyper2_witness,holds,witness_index,witness_value\n";
  for (const auto& r : rows) {
    out << r.a.str() << ',' << r.b.str() << ',' << r.c.str() << ','
        << (r.hyper1 ? "true" : "false") << ',' << r.hyper2_witness.str() << ','
        << (r.holds ? "true" : "false") << ','
        << (r.witness_index ? std::to_string(*r.witness_index) : "") << ','
        << (r.witness_value ? r.witness_value->str() : "") << '\n';
  }
  return out.str();
}

inline std::string to_csv(const std::vector<PowerScanRow>& rows) {
  std::ostringstream out;
  out << "series,alpha,holds,witness_index,witness_value\n";
  for (const auto& r : rows) {
    out << to_string(r.series) << ',' << r.alpha.str() << ',' << (r.holds ? "true" : "false")
        << ',' << (r.witness_index ? std::to_string(*r.witness_index) : "") << ','
        << (r.witness_value ? r.witness_value->str() : "") << '\n';
  }
  return out.str();
}

inline std::size_t count_violations(const std::vector<HyperScanRow>& rows) {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (!r.holds) ++n;
  return n;
}

inline std::size_t count_violations(const std::vector<PowerScanRow>& rows) {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (!r.holds) ++n;
  return n;
}

}  // namespace fps::scan

#endif
