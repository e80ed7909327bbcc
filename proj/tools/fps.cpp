// Command-line front end for the exact truncated power series toolkit.
//
// Exit codes: 0 success / all checks pass, 1 a check or verification failed,
// 2 usage or parse error, 3 mathematical precondition violated.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fps/fps.hpp"

namespace {

using fps::HypergeomParams;
using fps::Rational;
using fps::TruncatedPowerSeries;
using fps::json;

int default_order() {
  const char* env = std::getenv("FPS_DEFAULT_ORDER");
  if (env == nullptr || *env == '\0') return 10;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 0)
    throw fps::parse_error("FPS_DEFAULT_ORDER must be a non-negative integer, got '" +
                           std::string(env) + "'");
  return static_cast<int>(value);
}

int resolve_order(int flag_value) { return flag_value >= 0 ? flag_value : default_order(); }

TruncatedPowerSeries load_series(const std::string& path) {
  if (path == "-") {
    json j;
    try {
      std::cin >> j;
    } catch (const nlohmann::json::exception& e) {
      throw fps::parse_error(std::string("invalid JSON on stdin: ") + e.what());
    }
    return fps::series_from_json(j);
  }
  return fps::read_series_file(path);
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw fps::parse_error("cannot open output file: " + out_path);
  out << content;
}

void emit_json(const json& j, const std::string& out_path) { emit(j.dump(2) + "\n", out_path); }

std::vector<std::string> split_csv(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& list) {
  std::vector<Rational> out;
  for (const std::string& tok : split_csv(list)) out.push_back(Rational::parse(tok));
  return out;
}

std::string verdict_table(const fps::PropertyVerdict& v) {
  std::ostringstream out;
  out << "holds: " << (v.holds ? "yes" : "no") << "\n";
  if (v.witness_index) {
    out << "witness index: " << *v.witness_index << "\n";
    out << "witness values: ";
    for (std::size_t i = 0; i < v.witness_values->size(); ++i)
      out << (i ? ", " : "") << (*v.witness_values)[i].str();
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string series_name;
  std::vector<std::string> hyper;
  int order = -1;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  if (args.series_name.empty() == args.hyper.empty())
    throw fps::parse_error("generate: exactly one of --series or --hyper is required");
  const int order = resolve_order(args.order);
  TruncatedPowerSeries series =
      args.hyper.empty()
          ? fps::named_series(fps::named_series_from_string(args.series_name), order)
          : fps::gauss_2f1(HypergeomParams(Rational::parse(args.hyper[0]),
                                           Rational::parse(args.hyper[1]),
                                           Rational::parse(args.hyper[2])),
                           order);
  emit_json(fps::series_to_json(series), args.out);
  return 0;
}

// ---------------------------------------------------------------------- op

struct OpArgs {
  std::string kind;
  std::string in, in2, out;
  std::string alpha, beta, exponent;
  int order = -1;
};

int run_op(const OpArgs& args) {
  const auto unary = [&] { return load_series(args.in); };
  const auto binary_second = [&] {
    if (args.in2.empty()) throw fps::parse_error("op " + args.kind + ": --in2 is required");
    return load_series(args.in2);
  };

  TruncatedPowerSeries result = [&]() -> TruncatedPowerSeries {
    if (args.kind == "product") return cauchy_product(unary(), binary_second());
    if (args.kind == "reciprocal") return reciprocal(unary());
    if (args.kind == "quotient") return quotient(unary(), binary_second());
    if (args.kind == "hadamard") return hadamard_product(unary(), binary_second());
    if (args.kind == "binom-conv") return binomial_convolution(unary(), binary_second());
    if (args.kind == "dp-conv") {
      if (args.alpha.empty() || args.beta.empty())
        throw fps::parse_error("op dp-conv: --alpha and --beta are required");
      return davenport_polya_convolution(unary(), binary_second(), Rational::parse(args.alpha),
                                         Rational::parse(args.beta));
    }
    if (args.kind == "power") {
      if (args.exponent.empty()) throw fps::parse_error("op power: --exponent is required");
      return power_rational(unary(), Rational::parse(args.exponent));
    }
    if (args.kind == "integrate") return integrate_termwise(unary());
    if (args.kind == "differentiate") return differentiate(unary());
    if (args.kind == "truncate") {
      if (args.order < 0) throw fps::parse_error("op truncate: --order is required");
      return unary().truncated(args.order);
    }
    throw fps::parse_error("unknown op kind: " + args.kind);
  }();
  emit_json(fps::series_to_json(result), args.out);
  return 0;
}

// -------------------------------------------------------------------- check

struct CheckArgs {
  std::string kind;
  std::string in, in2, out;
  int from = 1;
  bool strict = false;
  int order = -1;
  std::string format = "json";
};

int run_check(const CheckArgs& args) {
  const TruncatedPowerSeries series = load_series(args.in);

  if (args.kind == "log-convex" || args.kind == "log-concave") {
    const fps::PropertyVerdict v =
        args.kind == "log-convex"
            ? fps::is_log_convex(series.coeffs(), args.from, args.strict)
            : fps::is_log_concave(series.coeffs(), args.from, args.strict);
    json j = fps::verdict_to_json(v);
    j["check"] = args.kind;
    j["from"] = args.from;
    j["strict"] = args.strict;
    emit(args.format == "table" ? verdict_table(v) : j.dump(2) + "\n", args.out);
    return v.holds ? 0 : 1;
  }
  if (args.kind == "unimodal") {
    const fps::PropertyVerdict v = fps::is_unimodal(series.coeffs());
    json j = fps::verdict_to_json(v);
    j["check"] = args.kind;
    emit(args.format == "table" ? verdict_table(v) : j.dump(2) + "\n", args.out);
    return v.holds ? 0 : 1;
  }
  if (args.kind == "classify") {
    const fps::ShapeClass shape = fps::classify_shape(series.coeffs());
    const json j = fps::shape_to_json(shape);
    emit(args.format == "table" ? j.dump() + "\n" : j.dump(2) + "\n", args.out);
    return 0;
  }
  if (args.kind == "ratio") {
    if (args.in2.empty()) throw fps::parse_error("check ratio: --in2 is required");
    const TruncatedPowerSeries denom = load_series(args.in2);
    if (series.order() != denom.order())
      throw fps::precondition_error("check ratio: order mismatch; truncate or extend explicitly");
    const fps::RatioMonotonicityReport report =
        fps::ratio_monotonicity(series.coeffs(), denom.coeffs(), args.strict);
    json j;
    j["check"] = "ratio";
    j["strict"] = args.strict;
    j["non_decreasing"] = fps::verdict_to_json(report.non_decreasing);
    j["non_increasing"] = fps::verdict_to_json(report.non_increasing);
    const bool nd = report.non_decreasing.holds, ni = report.non_increasing.holds;
    j["direction"] = nd && ni ? "constant" : nd ? "increasing" : ni ? "decreasing" : "neither";
    emit(args.format == "table" ? "direction: " + j["direction"].get<std::string>() + "\n"
                                : j.dump(2) + "\n",
         args.out);
    return nd || ni ? 0 : 1;
  }
  if (args.kind == "kaluza") {
    TruncatedPowerSeries input = series;
    if (args.order >= 0) {
      if (args.order > series.order())
        throw fps::precondition_error("check kaluza: --order exceeds the input series order");
      input = series.truncated(args.order);
    }
    const fps::KaluzaReport report = fps::kaluza_sign_check(input);
    const json j = fps::kaluza_report_to_json(report);
    if (args.format == "table") {
      std::ostringstream out;
      out << "holds: " << (report.holds ? "yes" : "no") << " (order " << report.checked_order
          << ")\n";
      if (report.first_positive_index)
        out << "first positive reciprocal coefficient: index " << *report.first_positive_index
            << " value " << report.reciprocal_prefix[*report.first_positive_index].str() << "\n";
      emit(out.str(), args.out);
    } else {
      emit_json(j, args.out);
    }
    return report.holds ? 0 : 1;
  }
  throw fps::parse_error("unknown check kind: " + args.kind);
}

// ---------------------------------------------------------------- predicate

struct PredicateArgs {
  std::string kind;
  std::string a, b, c, a2, b2, c2;
  int order = -1;
  std::string format = "json";
  std::string out;
};

int run_predicate(const PredicateArgs& args) {
  const auto first_params = [&] {
    if (args.a.empty() || args.b.empty() || args.c.empty())
      throw fps::parse_error("predicate " + args.kind + ": --a, --b, --c are required");
    return HypergeomParams(Rational::parse(args.a), Rational::parse(args.b),
                           Rational::parse(args.c));
  };
  const auto second_params = [&] {
    if (args.a2.empty() || args.b2.empty() || args.c2.empty())
      throw fps::parse_error("predicate " + args.kind + ": --a2, --b2, --c2 are required");
    return HypergeomParams(Rational::parse(args.a2), Rational::parse(args.b2),
                           Rational::parse(args.c2));
  };

  if (args.kind == "hyper1" || args.kind == "nonneg") {
    const fps::PredicateResult r = args.kind == "hyper1"
                                       ? fps::hyper1_predicate(first_params())
                                       : fps::nonneg_reciprocal_predicate(first_params());
    json j = fps::predicate_to_json(r);
    j["predicate"] = args.kind;
    emit_json(j, args.out);
    return r.value ? 0 : 1;
  }
  if (args.kind == "hyper2") {
    const Rational witness = fps::hyper2_witness(first_params());
    json j;
    j["predicate"] = "hyper2";
    j["a2_coefficient"] = witness.str();
    j["positive"] = witness.sign() > 0;
    j["kaluza_sign_property_fails"] = witness.sign() > 0;
    emit_json(j, args.out);
    return witness.sign() > 0 ? 1 : 0;
  }
  if (args.kind == "hyper4") {
    const fps::Hyper4Conditions r = fps::hyper4_predicate(first_params(), second_params());
    json j;
    j["predicate"] = "hyper4";
    j["direction"] = fps::to_string(r.direction);
    json conds = json::array();
    for (const auto c : r.satisfied) conds.push_back(fps::to_string(c));
    j["satisfied"] = std::move(conds);
    emit_json(j, args.out);
    return r.direction != fps::QuotientDirection::none ? 0 : 1;
  }
  if (args.kind == "quo") {
    const fps::PropertyVerdict v = fps::quo_inequality_exact(first_params(), second_params());
    json j = fps::verdict_to_json(v);
    j["predicate"] = "quo";
    emit_json(j, args.out);
    return v.holds ? 0 : 1;
  }
  if (args.kind == "combined") {
    const fps::PropertyVerdict v =
        fps::combined_theorem_check(first_params(), second_params(), resolve_order(args.order));
    json j = fps::verdict_to_json(v);
    j["predicate"] = "combined";
    emit_json(j, args.out);
    return v.holds ? 0 : 1;
  }
  throw fps::parse_error("unknown predicate kind: " + args.kind);
}

// ------------------------------------------------------------------ analyze

struct AnalyzeArgs {
  std::string num, den, samples, out;
};

int run_analyze_quotient(const AnalyzeArgs& args) {
  const TruncatedPowerSeries numer = load_series(args.num);
  const TruncatedPowerSeries denom = load_series(args.den);
  const std::vector<Rational> points = parse_rationals(args.samples);
  const fps::QuotientMonotonicityReport report =
      fps::quotient_monotone_prediction(numer, denom, points);

  json j;
  j["ratio_non_decreasing"] = fps::verdict_to_json(report.coefficient_ratios.non_decreasing);
  j["ratio_non_increasing"] = fps::verdict_to_json(report.coefficient_ratios.non_increasing);
  j["prediction"] = fps::to_string(report.predicted);
  json samples = json::array();
  for (const auto& [x, value] : report.samples) {
    json s;
    s["x"] = x.str();
    s["value"] = value.str();
    samples.push_back(std::move(s));
  }
  j["samples"] = std::move(samples);
  j["samples_non_decreasing"] = report.samples_non_decreasing.holds;
  j["samples_non_increasing"] = report.samples_non_increasing.holds;
  j["agreement"] = report.agreement;
  j["uses_truncations"] = true;
  emit_json(j, args.out);
  return report.agreement ? 0 : 1;
}

// --------------------------------------------------------------------- mean

struct MeanArgs {
  double a = 0, b = 0;
  std::string t;
};

int run_mean(const MeanArgs& args) {
  const Rational t = Rational::parse(args.t);
  if (t.sign() <= 0) throw fps::precondition_error("mean: t must be positive");
  const long double value = fps::power_mean(
      {static_cast<long double>(args.a), static_cast<long double>(args.b), t.to_long_double()});
  json j;
  j["a"] = args.a;
  j["b"] = args.b;
  j["t"] = t.str();
  j["mean"] = static_cast<double>(value);
  emit_json(j, "");
  return 0;
}

// ------------------------------------------------------------------- verify

struct VerifyThm2Args {
  int order = 8;
  std::string q0 = "1999/1000";
  std::string t = "1/100";
  double tolerance = 1e-10;
};

int run_verify_thm2(const VerifyThm2Args& args) {
  const fps::Theorem2Report r =
      fps::theorem2_verify(args.order, Rational::parse(args.q0), Rational::parse(args.t),
                           static_cast<long double>(args.tolerance));
  json j;
  j["q0"] = r.q0.str();
  j["t"] = r.t.str();
  j["order"] = r.order;
  j["relaxed_condition_holds"] = r.relaxed_condition.verdict.holds;
  j["relaxed_condition_tolerance"] = static_cast<double>(r.relaxed_condition.tolerance);
  j["reciprocal"] = fps::series_to_json(r.reciprocal_prefix);
  j["q2"] = r.q2.str();
  j["q2_positive"] = r.q2_positive;
  j["decimals"] = {r.r0_decimal, r.r1_decimal, r.q2_decimal};
  j["power_mean"] = static_cast<double>(r.mean_value);
  j["reference_case"] = r.reference_case;
  if (r.reference_case) {
    j["decimals_match_reference"] = r.decimals_match_reference;
    j["mean_matches_reference"] = r.mean_matches_reference;
  }
  j["holds"] = r.holds;
  emit_json(j, "");
  return r.holds ? 0 : 1;
}

// --------------------------------------------------------------------- scan

struct ScanArgs {
  std::string values;          // hyper grid per axis
  std::string series = "f1,f2,f3";
  std::string alphas;
  int order = -1;
  int jobs = 1;
  std::string out;
};

int run_scan_hyper(const ScanArgs& args) {
  if (args.values.empty()) throw fps::parse_error("scan hyper: --values is required");
  const std::vector<Rational> values = parse_rationals(args.values);
  const auto rows = fps::scan::scan_hyper(values, resolve_order(args.order), args.jobs);
  emit(fps::scan::to_csv(rows), args.out);
  return 0;
}

int run_scan_power(const ScanArgs& args) {
  std::vector<fps::NamedSeries> series;
  for (const std::string& name : split_csv(args.series))
    series.push_back(fps::named_series_from_string(name));
  const std::vector<Rational> alphas =
      args.alphas.empty() ? fps::scan::default_alpha_grid() : parse_rationals(args.alphas);
  const int order = args.order >= 0 ? args.order : 20;
  const auto rows = fps::scan::scan_power(series, alphas, order, args.jobs);
  emit(fps::scan::to_csv(rows), args.out);
  return 0;
}

// ---------------------------------------------------------- reproduce-paper

int run_reproduce(const std::string& filter) {
  const auto results =
      fps::repro::run_all(filter.empty() ? std::nullopt : std::optional<std::string>(filter));
  for (const auto& r : results) {
    if (r.pass) {
      std::cout << "PASS  " << r.name << "\n";
    } else {
      std::cout << "FAIL  " << r.name << "\n      expected: " << r.expected
                << "\n      actual:   " << r.actual << "\n";
    }
  }
  const bool ok = fps::repro::all_pass(results);
  std::cout << (ok ? "all tables pass" : "some tables FAILED") << " (" << results.size()
            << " checked)\n";
  return ok ? 0 : 1;
}

// ----------------------------------------------------------------- selftest

struct SelftestArgs {
  std::uint64_t seed = 20260810;
  int trials = 200;
  int max_order = 12;
};

int run_selftest(const SelftestArgs& args) {
  std::mt19937_64 rng(args.seed);
  int failures = 0;

  for (int t = 0; t < args.trials; ++t) {
    const int order = static_cast<int>(fps::rnd::range(rng, 1, args.max_order));
    const TruncatedPowerSeries f = fps::rnd::series(rng, order);
    const TruncatedPowerSeries g = fps::rnd::series(rng, order);
    if (fps::reciprocal(g) != fps::oracle::reciprocal_via_linear_solve(g)) ++failures;
    if (fps::quotient(f, g) != fps::oracle::quotient_via_linear_solve(f, g)) ++failures;
  }
  std::cout << "reciprocal/quotient vs linear solve on " << args.trials << " random series: "
            << (failures == 0 ? "ok" : std::to_string(failures) + " mismatches") << "\n";

  int power_failures = 0;
  const int power_trials = std::max(args.trials / 8, 8);
  for (int t = 0; t < power_trials; ++t) {
    const int order = static_cast<int>(fps::rnd::range(rng, 2, 8));
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
    coeffs[0] = Rational(1);
    for (int n = 1; n <= order; ++n) coeffs[n] = fps::rnd::rational(rng, 6, 6);
    const TruncatedPowerSeries f{std::move(coeffs)};
    const Rational exponent(fps::rnd::range(rng, -3, 3), fps::rnd::range(rng, 1, 4));
    const TruncatedPowerSeries g = fps::power_rational(f, exponent);
    if (!fps::oracle::power_identity_check(f, exponent, g)) ++power_failures;
  }
  std::cout << "rational powers vs repeated convolution on " << power_trials
            << " random cases: " << (power_failures == 0 ? "ok" : std::to_string(power_failures) + " mismatches")
            << "\n";

  return failures + power_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fps: exact arithmetic toolkit for truncated power series"};
  app.require_subcommand(1);
  int exit_code = 0;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "emit a built-in or hypergeometric series");
  generate->add_option("--series", gen.series_name, "built-in series name");
  generate->add_option("--hyper", gen.hyper, "2F1 parameters a b c (rationals)")->expected(3);
  generate->add_option("--order", gen.order, "truncation order (default FPS_DEFAULT_ORDER or 10)");
  generate->add_option("--out", gen.out, "output file (default stdout)");
  generate->callback([&] { exit_code = run_generate(gen); });

  OpArgs op;
  auto* opcmd = app.add_subcommand("op", "series operation on JSON inputs");
  opcmd
      ->add_option("kind", op.kind, "operation")
      ->required()
      ->check(CLI::IsMember({"product", "reciprocal", "quotient", "hadamard", "binom-conv",
                             "dp-conv", "power", "integrate", "differentiate", "truncate"}));
  opcmd->add_option("--in", op.in, "input series JSON ('-' for stdin)")->required();
  opcmd->add_option("--in2", op.in2, "second input for binary operations");
  opcmd->add_option("--alpha", op.alpha, "dp-conv weight alpha (rational)");
  opcmd->add_option("--beta", op.beta, "dp-conv weight beta (rational)");
  opcmd->add_option("--exponent", op.exponent, "power exponent p/q");
  opcmd->add_option("--order", op.order, "target order for truncate");
  opcmd->add_option("--out", op.out, "output file");
  opcmd->callback([&] { exit_code = run_op(op); });

  CheckArgs check;
  auto* checkcmd = app.add_subcommand("check", "sequence and sign-property checks");
  checkcmd
      ->add_option("kind", check.kind, "check kind")
      ->required()
      ->check(CLI::IsMember({"log-convex", "log-concave", "unimodal", "classify", "ratio",
                             "kaluza"}));
  checkcmd->add_option("--in", check.in, "input series JSON")->required();
  checkcmd->add_option("--in2", check.in2, "denominator series (ratio)");
  checkcmd->add_option("--from", check.from, "first index checked (log-convex/log-concave)");
  checkcmd->add_flag("--strict", check.strict, "strict inequalities");
  checkcmd->add_option("--order", check.order, "re-truncate before the kaluza check");
  checkcmd->add_option("--format", check.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  checkcmd->add_option("--out", check.out, "output file");
  checkcmd->callback([&] { exit_code = run_check(check); });

  PredicateArgs pred;
  auto* predcmd = app.add_subcommand("predicate", "hypergeometric parameter predicates");
  predcmd
      ->add_option("kind", pred.kind, "predicate kind")
      ->required()
      ->check(CLI::IsMember({"hyper1", "hyper2", "nonneg", "hyper4", "quo", "combined"}));
  predcmd->add_option("--a", pred.a, "first parameter a (rational)");
  predcmd->add_option("--b", pred.b, "first parameter b");
  predcmd->add_option("--c", pred.c, "first parameter c");
  predcmd->add_option("--a2", pred.a2, "second parameter a");
  predcmd->add_option("--b2", pred.b2, "second parameter b");
  predcmd->add_option("--c2", pred.c2, "second parameter c");
  predcmd->add_option("--order", pred.order, "truncation order (combined)");
  predcmd->add_option("--out", pred.out, "output file");
  predcmd->callback([&] { exit_code = run_predicate(pred); });

  AnalyzeArgs analyze;
  auto* analyzecmd = app.add_subcommand("analyze", "quotient monotonicity analysis");
  auto* quotientcmd = analyzecmd->add_subcommand("quotient", "ratio hypothesis vs sampled quotient");
  quotientcmd->add_option("--num", analyze.num, "numerator series JSON")->required();
  quotientcmd->add_option("--den", analyze.den, "denominator series JSON")->required();
  quotientcmd->add_option("--samples", analyze.samples, "comma-separated rationals in (0,1)")
      ->required();
  quotientcmd->add_option("--out", analyze.out, "output file");
  quotientcmd->callback([&] { exit_code = run_analyze_quotient(analyze); });
  analyzecmd->require_subcommand(1);

  MeanArgs mean;
  auto* meancmd = app.add_subcommand("mean", "power mean ((a^t+b^t)/2)^(1/t)");
  meancmd->add_option("--a", mean.a, "first value (decimal)")->required();
  meancmd->add_option("--b", mean.b, "second value (decimal)")->required();
  meancmd->add_option("--t", mean.t, "exponent t (rational)")->required();
  meancmd->callback([&] { exit_code = run_mean(mean); });

  VerifyThm2Args thm2;
  auto* verifycmd = app.add_subcommand("verify", "built-in verifiers");
  auto* thm2cmd = verifycmd->add_subcommand(
      "thm2", "sharpness counterexample q0 + sum x^n/n for the relaxed log-convexity condition");
  thm2cmd->add_option("--order", thm2.order, "truncation order (>= 4)");
  thm2cmd->add_option("--q0", thm2.q0, "constant term (rational)");
  thm2cmd->add_option("--t", thm2.t, "power mean exponent (rational)");
  thm2cmd->add_option("--tol", thm2.tolerance, "absolute tolerance for the float comparison");
  thm2cmd->callback([&] { exit_code = run_verify_thm2(thm2); });
  verifycmd->require_subcommand(1);

  ScanArgs scan;
  auto* scancmd = app.add_subcommand("scan", "grid scans for Kaluza sign violations");
  auto* scanhyper = scancmd->add_subcommand("hyper", "2F1 parameter grid (cross product)");
  scanhyper->add_option("--values", scan.values, "comma-separated axis values (rationals)")
      ->required();
  scanhyper->add_option("--order", scan.order, "truncation order");
  scanhyper->add_option("--jobs", scan.jobs, "worker threads");
  scanhyper->add_option("--out", scan.out, "output CSV file");
  scanhyper->callback([&] { exit_code = run_scan_hyper(scan); });
  auto* scanpower = scancmd->add_subcommand("power", "[f(x)]^alpha over named series");
  scanpower->add_option("--series", scan.series, "comma-separated series names");
  scanpower->add_option("--alphas", scan.alphas, "comma-separated exponents (default k/20 grid)");
  scanpower->add_option("--order", scan.order, "truncation order (default 20)");
  scanpower->add_option("--jobs", scan.jobs, "worker threads");
  scanpower->add_option("--out", scan.out, "output CSV file");
  scanpower->callback([&] { exit_code = run_scan_power(scan); });
  scancmd->require_subcommand(1);

  std::string filter;
  auto* repro = app.add_subcommand("reproduce-paper", "verify all built-in reference tables");
  repro->add_option("--filter", filter, "only run tables whose name contains this substring");
  repro->callback([&] { exit_code = run_reproduce(filter); });

  SelftestArgs selftest;
  auto* selftestcmd = app.add_subcommand("selftest", "cross-validate against the brute-force oracle");
  selftestcmd->add_option("--seed", selftest.seed, "random seed");
  selftestcmd->add_option("--trials", selftest.trials, "number of random series");
  selftestcmd->add_option("--max-order", selftest.max_order, "maximum random order");
  selftestcmd->callback([&] { exit_code = run_selftest(selftest); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const fps::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fps::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
