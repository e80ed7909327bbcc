#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "fps/generators.hpp"
#include "fps/sequence_properties.hpp"

using fps::NamedSeries;
using fps::PropertyVerdict;
using fps::Rational;
using fps::ShapeClass;

namespace {

std::vector<Rational> seq(const std::vector<std::string>& strs) {
  std::vector<Rational> v;
  v.reserve(strs.size());
  for (const auto& s : strs) v.push_back(Rational::parse(s));
  return v;
}

}  // namespace

TEST_CASE("is_log_convex") {
  REQUIRE(fps::is_log_convex(seq({"1", "1/2", "1/3", "1/4", "1/5"})).holds);

  const auto f5 = seq({"1", "1", "1/2", "1/3"});
  const PropertyVerdict v = fps::is_log_convex(f5);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness_index == 1);
  REQUIRE((*v.witness_values)[0] == Rational(1));
  REQUIRE((*v.witness_values)[2] == Rational(1, 2));
  REQUIRE(fps::is_log_convex(f5, 2).holds);

  REQUIRE(fps::is_log_convex(seq({"5", "5", "5"})).holds);  // equality case
  REQUIRE_FALSE(fps::is_log_convex(seq({"5", "5", "5"}), 1, /*strict=*/true).holds);

  REQUIRE_THROWS_AS(fps::is_log_convex(seq({"1", "-1", "2"})), fps::precondition_error);
  REQUIRE_THROWS_AS(fps::is_log_convex(seq({"1", "2"})), fps::precondition_error);
  REQUIRE_THROWS_AS(fps::is_log_convex(seq({"1", "2", "3"}), 0), fps::precondition_error);
}

TEST_CASE("is_log_concave") {
  REQUIRE(fps::is_log_concave(seq({"1", "2", "3", "4"})).holds);
  REQUIRE(fps::is_log_concave(seq({"3", "3", "3"})).holds);
  const PropertyVerdict v = fps::is_log_concave(seq({"1", "1/2", "1/2"}));
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness_index == 1);
}

TEST_CASE("is_unimodal") {
  REQUIRE(fps::is_unimodal(seq({"1", "2", "3", "2", "1"})).holds);
  REQUIRE(fps::is_unimodal(seq({"1"})).holds);
  REQUIRE(fps::is_unimodal(seq({"3", "2", "1"})).holds);
  const PropertyVerdict v = fps::is_unimodal(seq({"1", "2", "1", "2"}));
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness_index == 3);  // the renewed rise
}

TEST_CASE("log-concave positive sequences are unimodal") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    // termwise reciprocals of a log-convex sequence are log-concave
    const auto s = fps::random_log_convex_sequence(rng, 10);
    std::vector<Rational> inverted;
    inverted.reserve(s.size());
    for (const auto& x : s) inverted.push_back(x.reciprocal());
    REQUIRE(fps::is_log_concave(inverted).holds);
    REQUIRE(fps::is_unimodal(inverted).holds);
  }
}

TEST_CASE("classify_shape on the worked examples") {
  REQUIRE(fps::classify_shape(fps::named_series(NamedSeries::f1, 3).coeffs()) ==
          ShapeClass::non_decreasing());
  REQUIRE(fps::classify_shape(fps::named_series(NamedSeries::f3, 3).coeffs()) ==
          ShapeClass::non_increasing());
  REQUIRE(fps::classify_shape(fps::named_series(NamedSeries::f4, 5).coeffs()) ==
          ShapeClass::valley_at(2));

  // tie a0 = a1 classifies as non-decreasing
  REQUIRE(fps::classify_shape(seq({"2", "2", "3"})) == ShapeClass::non_decreasing());
  REQUIRE(fps::classify_shape(seq({"2", "2", "2"})) == ShapeClass::non_decreasing());

  REQUIRE_THROWS_AS(fps::classify_shape(seq({"1", "2", "1", "2"})), fps::precondition_error);
  REQUIRE_THROWS_AS(fps::classify_shape(seq({"1", "-2"})), fps::precondition_error);
}

TEST_CASE("classify_shape agrees with a brute-force scan on random log-convex input") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    const auto s = fps::random_log_convex_sequence(rng, 12);
    REQUIRE(fps::is_log_convex(s).holds);
    const ShapeClass shape = fps::classify_shape(s);

    // brute force: count adjacent movements
    bool any_rise = false, any_fall = false, fall_after_rise = false;
    for (std::size_t n = 1; n < s.size(); ++n) {
      if (s[n - 1] < s[n]) any_rise = true;
      if (s[n - 1] > s[n]) {
        any_fall = true;
        if (any_rise) fall_after_rise = true;
      }
    }
    REQUIRE_FALSE(fall_after_rise);
    if (!any_fall && shape.kind == ShapeClass::Kind::Valley) FAIL("valley without a fall");
    if (shape.kind == ShapeClass::Kind::NonDecreasing) REQUIRE_FALSE(any_fall);
    if (shape.kind == ShapeClass::Kind::NonIncreasing) REQUIRE_FALSE(any_rise);
    if (shape.kind == ShapeClass::Kind::Valley) {
      REQUIRE(any_rise);
      REQUIRE(any_fall);
      const int k = shape.valley_index;
      for (int n = 1; n <= k; ++n) REQUIRE(s[n - 1] >= s[n]);
      for (std::size_t n = k + 1; n < s.size(); ++n) REQUIRE(s[n - 1] <= s[n]);
    }
  }
}

TEST_CASE("geometric sequences are both log-convex and log-concave") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational c(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 9));
    const Rational r(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 9));
    std::vector<Rational> s{c};
    for (int n = 1; n < 8; ++n) s.push_back(s.back() * r);
    REQUIRE(fps::is_log_convex(s).holds);
    REQUIRE(fps::is_log_concave(s).holds);
  }
}

TEST_CASE("ratio_monotonicity") {
  const auto f1 = fps::named_series(NamedSeries::f1, 3);
  const auto f2 = fps::named_series(NamedSeries::f2, 3);
  const auto increasing = fps::ratio_monotonicity(f1.coeffs(), f2.coeffs());
  REQUIRE(increasing.non_decreasing.holds);
  REQUIRE_FALSE(increasing.non_increasing.holds);

  const auto constant = fps::ratio_monotonicity(f1.coeffs(), f1.coeffs());
  REQUIRE(constant.non_decreasing.holds);
  REQUIRE(constant.non_increasing.holds);

  const auto neither = fps::ratio_monotonicity(seq({"1", "2", "1"}), seq({"1", "1", "1"}));
  REQUIRE_FALSE(neither.non_decreasing.holds);
  REQUIRE_FALSE(neither.non_increasing.holds);
  REQUIRE(neither.non_increasing.witness_index == 0);
  REQUIRE(neither.non_decreasing.witness_index == 1);

  REQUIRE_THROWS_AS(fps::ratio_monotonicity(seq({"1", "2"}), seq({"1", "0"})),
                    fps::precondition_error);
  REQUIRE_THROWS_AS(fps::ratio_monotonicity(seq({"1", "2"}), seq({"1"})),
                    fps::precondition_error);
}

TEST_CASE("ratio_unimodal") {
  const auto ones = seq({"1", "1", "1", "1"});
  const auto peaked = fps::ratio_unimodal(seq({"1", "2", "3", "2"}), ones);
  REQUIRE(peaked.verdict.holds);
  REQUIRE(peaked.peak_index == 2);

  const auto monotone = fps::ratio_unimodal(seq({"1", "2", "3", "4"}), ones);
  REQUIRE(monotone.verdict.holds);
  REQUIRE(monotone.peak_index == 3);  // degenerate peak at the end

  const auto bad = fps::ratio_unimodal(seq({"1", "2", "1", "2"}), ones);
  REQUIRE_FALSE(bad.verdict.holds);
}

TEST_CASE("jurkat_condition") {
  // unit q against p with p1 <= 0 reduces to the sign of p1
  REQUIRE(fps::jurkat_condition(seq({"1", "0", "0"}), seq({"1", "-1/2", "-1/2"}), false).holds);
  REQUIRE(fps::jurkat_condition(seq({"1", "1/2", "1/4"}), seq({"1", "1/2", "1/4"}), false).holds);
  REQUIRE(fps::jurkat_condition(seq({"1", "1/2", "1/4"}), seq({"1", "1/2", "1/4"}), true).holds);

  // p = [1, 1/2, 1/4] is non-increasing, so the precondition passes and the
  // condition itself fails at n = 1 (-1 >= -1/2 is false)
  const PropertyVerdict v =
      fps::jurkat_condition(seq({"1", "0", "0"}), seq({"1", "1/2", "1/4"}), false);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness_index == 1);

  REQUIRE_THROWS_AS(fps::jurkat_condition(seq({"1", "0"}), seq({"-1", "-2"}), false),
                    fps::precondition_error);
  REQUIRE_THROWS_AS(fps::jurkat_condition(seq({"1", "0", "0"}), seq({"1", "2", "3"}), false),
                    fps::precondition_error);
}

TEST_CASE("unit numerator reduces the jurkat condition to the sign of p1") {
  std::mt19937_64 rng(66);
  const std::vector<Rational> unit = {Rational(1), Rational(0), Rational(0), Rational(0),
                                      Rational(0)};
  for (int trial = 0; trial < 50; ++trial) {
    // p0 > 0, p1 <= 0, then non-increasing
    std::vector<Rational> p{fps::random_log_convex_sequence(rng, 1)[0]};
    p.push_back(Rational(-static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 5)));
    while (p.size() < unit.size())
      p.push_back(p.back() - Rational(static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 4)));
    REQUIRE(fps::jurkat_condition(unit, p, false).holds);
  }
}

TEST_CASE("every failing witness re-checks against the defining inequality") {
  std::mt19937_64 rng(77);
  int seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> s;
    const int len = 3 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i)
      s.emplace_back(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 9));
    const PropertyVerdict v = fps::is_log_convex(s);
    if (!v.holds) {
      ++seen;
      const auto n = static_cast<std::size_t>(*v.witness_index);
      REQUIRE(s[n] * s[n] > s[n - 1] * s[n + 1]);
      REQUIRE((*v.witness_values)[0] == s[n - 1]);
      REQUIRE((*v.witness_values)[1] == s[n]);
      REQUIRE((*v.witness_values)[2] == s[n + 1]);
    }
  }
  REQUIRE(seen > 0);
}

TEST_CASE("random log-convex generator produces exactly log-convex sequences") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = fps::random_log_convex_sequence(rng, 20);
    REQUIRE(s.size() == 20);
    REQUIRE(fps::is_log_convex(s).holds);
    for (const auto& x : s) REQUIRE(x.sign() > 0);
  }
}

TEST_CASE("is_monotone") {
  REQUIRE(fps::is_monotone(seq({"3", "2", "2", "1"}), true).holds);
  REQUIRE_FALSE(fps::is_monotone(seq({"3", "2", "2", "1"}), true, /*strict=*/true).holds);
  REQUIRE(fps::is_monotone(seq({"1", "2", "4"}), false, /*strict=*/true).holds);
  const auto v = fps::is_monotone(seq({"1", "2", "1"}), false);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness_index == 2);
}
