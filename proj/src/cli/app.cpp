#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "schubert/cli.hpp"
#include "schubert/error.hpp"
#include "schubert/parallel.hpp"

namespace schubert::cli {

#ifndef SCHUBERT_ENGINE_VERSION
#define SCHUBERT_ENGINE_VERSION "dev"
#endif

std::string engine_version() { return SCHUBERT_ENGINE_VERSION; }

namespace {

using Clock = std::chrono::steady_clock;

struct SharedOptions {
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  std::size_t grid = 0;
  bool dump_poly = false;
  unsigned threads = 1;
};

struct CountArgs {
  std::string regime;
  int d = 0;
  int k = 0;
};

struct LambdaArgs {
  std::string regime;
  int d = 0;
  int k = 0;
  std::vector<int> partition;
  bool numeric = false;
};

struct TableArgs {
  std::string table;
  std::vector<int> values;
  int k = 2;
};

struct FeasibilityArgs {
  std::string regime;
  std::vector<int> ds;
  std::vector<int> ks;
  int d_max = 12;
  int k_max = 6;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<ResultCache> open_cache(const SharedOptions& shared) {
  if (shared.no_cache) return std::nullopt;
  std::string dir = shared.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("SCHUBERT_CACHE")) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  return ResultCache(dir);
}

/// Serves `compute()` from the cache when possible and appends the
/// volatile fields (cached, elapsed_ms) to the returned body.
Json cached_body(const std::optional<ResultCache>& cache, const std::string& key,
                 const std::function<Json()>& compute) {
  const auto start = Clock::now();
  std::optional<Json> payload = cache ? cache->lookup(key) : std::nullopt;
  const bool hit = payload.has_value();
  if (!hit) {
    payload = compute();
    if (cache) cache->store(key, *payload);
  }
  Json body = std::move(*payload);
  body["cached"] = hit;
  body["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return body;
}

void require_json(const SharedOptions& shared, const std::string& command) {
  if (shared.format != "json") {
    throw UsageError("'" + command + "' emits JSON only; CSV is available for tables "
                     "(asymptote, feasibility)");
  }
}

Json common_fields(Json body, Json parameters) {
  body["engine_version"] = engine_version();
  body["parameters"] = std::move(parameters);
  return body;
}

std::string join(const std::vector<int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Commands. Each returns an exit code and writes its body to `out`.

int run_count(const CountArgs& args, const SharedOptions& shared, std::ostream& out) {
  require_json(shared, "count");
  const Regime regime = parse_regime(args.regime);
  const std::map<std::string, std::string> params{{"regime", args.regime},
                                                  {"d", std::to_string(args.d)},
                                                  {"k", std::to_string(args.k)},
                                                  {"dump-poly", shared.dump_poly ? "1" : "0"}};
  const Json body = cached_body(open_cache(shared), ResultCache::canonical_key("count", params), [&] {
    const CountReport report =
        regime == Regime::Complex ? complex_count(args.d, args.k) : real_count(args.d, args.k);
    Json j = to_json(report, "count");
    j = common_fields(std::move(j), {{"regime", args.regime}, {"d", args.d}, {"k", args.k}});
    j["feasibility"] = to_json(feasibility(args.d, args.k, regime));
    if (shared.dump_poly && report.feasible) {
      const auto poly = regime == Regime::Complex ? complex_root_poly(args.d, args.k)
                                                  : real_root_poly(args.d, args.k);
      j["poly"] = to_text(poly.poly());
    }
    return j;
  });
  out << body.dump(2) << '\n';
  return body["feasible"].get<bool>() ? kOk : kInfeasible;
}

int run_incidence(const std::string& regime_text, int n, const SharedOptions& shared,
                  std::ostream& out) {
  require_json(shared, "incidence");
  const Regime regime = parse_regime(regime_text);
  const std::map<std::string, std::string> params{{"regime", regime_text}, {"n", std::to_string(n)}};
  const Json body =
      cached_body(open_cache(shared), ResultCache::canonical_key("incidence", params), [&] {
        Json j;
        j["command"] = "incidence";
        j["regime"] = regime_text;
        j["n"] = n;
        j["k"] = 4;
        j["m"] = 2 * n;
        j["value"] = to_decimal(regime == Regime::Complex ? incidence_complex(n) : incidence_real(n));
        if (regime == Regime::Real) j["catalan"] = to_decimal(catalan(static_cast<unsigned>(n)));
        return common_fields(std::move(j), {{"regime", regime_text}, {"n", n}});
      });
  out << body.dump(2) << '\n';
  return kOk;
}

int run_cubic_ci(int r, const SharedOptions& shared, std::ostream& out) {
  require_json(shared, "cubic-ci");
  const std::map<std::string, std::string> params{{"r", std::to_string(r)}};
  const Json body =
      cached_body(open_cache(shared), ResultCache::canonical_key("cubic-ci", params), [&] {
        Json j = to_json(cubic_ci_real(r), "cubic-ci");
        j["r"] = r;
        j["catalan_substitution"] = to_decimal(catalan_substitution(r));
        return common_fields(std::move(j), {{"r", r}});
      });
  out << body.dump(2) << '\n';
  return kOk;
}

int run_schur(const std::string& regime_text, const std::vector<int>& parts, int k_arg,
              const SharedOptions& shared, std::ostream& out) {
  require_json(shared, "schur");
  const Regime regime = parse_regime(regime_text);
  const Partition alpha(parts);
  std::size_t k = k_arg > 0 ? static_cast<std::size_t>(k_arg)
                            : (regime == Regime::Complex ? alpha.length() : alpha.length() / 2);
  const auto start = Clock::now();
  const RootPolynomial s =
      regime == Regime::Complex ? schur_polynomial(alpha, k) : real_schur_polynomial(alpha, k);
  Json j;
  j["command"] = "schur";
  j["regime"] = regime_text;
  j["partition"] = parts;
  j["k"] = k;
  j["terms"] = s.poly().size();
  j["degree"] = s.poly().total_degree();
  j["poly"] = to_text(s.poly());
  j = common_fields(std::move(j), {{"regime", regime_text}, {"partition", parts}, {"k", k}});
  j["elapsed_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  out << j.dump(2) << '\n';
  return kOk;
}

int run_lambda(const LambdaArgs& args, const SharedOptions& shared, std::ostream& out) {
  require_json(shared, "lambda");
  const Regime regime = parse_regime(args.regime);
  const Feasibility feas = feasibility(args.d, args.k, regime);
  const std::size_t length = regime == Regime::Complex ? static_cast<std::size_t>(args.k)
                                                       : 2 * static_cast<std::size_t>(args.k);
  Partition alpha;
  if (!args.partition.empty()) {
    alpha = Partition(args.partition);
  } else if (feas.feasible()) {
    alpha = Partition::constant(length, *feas.m);
  } else {
    Json j = common_fields({{"command", "lambda"}, {"error", "infeasible (d, k) and no --partition"}},
                           {{"regime", args.regime}, {"d", args.d}, {"k", args.k}});
    j["feasibility"] = to_json(feas);
    out << j.dump(2) << '\n';
    return kInfeasible;
  }
  const std::map<std::string, std::string> params{
      {"regime", args.regime},          {"d", std::to_string(args.d)},
      {"k", std::to_string(args.k)},    {"partition", join(std::vector<int>(alpha.parts().begin(), alpha.parts().end()))},
      {"numeric", args.numeric ? "1" : "0"}, {"grid", std::to_string(shared.grid)}};
  const Json body = cached_body(open_cache(shared), ResultCache::canonical_key("lambda", params), [&] {
    Json j;
    j["command"] = "lambda";
    j["regime"] = args.regime;
    j["d"] = args.d;
    j["k"] = args.k;
    j["partition"] = std::vector<int>(alpha.parts().begin(), alpha.parts().end());
    SchurCoefficient exact;
    QuadratureIntegrand integrand;
    if (regime == Regime::Complex) {
      exact = schur_coefficient(complex_root_poly(args.d, args.k), alpha);
      integrand = make_linear_form_integrand(static_cast<std::size_t>(args.k),
                                             complex_root_factors(args.d, args.k));
    } else {
      const auto f = real_root_poly(args.d, args.k);
      exact = real_schur_coefficient(f, alpha);
      integrand = make_integrand(f.poly());
    }
    j["value"] = to_decimal(exact.value);
    j["sign_certain"] = exact.sign_certain;
    if (args.numeric) {
      const std::size_t grid =
          shared.grid ? shared.grid : quadrature_threshold(integrand, alpha, regime);
      const auto numeric = numeric_schur_coefficient(integrand, alpha, regime, grid);
      const double reference = exact.value.get_d();
      j["numeric"] = {{"real", numeric.real()},
                      {"imag", numeric.imag()},
                      {"grid", grid},
                      {"relative_error",
                       std::abs(numeric.real() - reference) / std::max(1.0, std::abs(reference))}};
    }
    j = common_fields(std::move(j), {{"regime", args.regime},
                                     {"d", args.d},
                                     {"k", args.k},
                                     {"partition", j["partition"]},
                                     {"numeric", args.numeric}});
    j["feasibility"] = to_json(feas);
    return j;
  });
  out << body.dump(2) << '\n';
  return kOk;
}

int run_scan(int d, const SharedOptions& shared, std::ostream& out) {
  require_json(shared, "scan");
  const std::size_t grid = shared.grid ? shared.grid : 360;
  const auto start = Clock::now();
  const TorusSample sample = torus_scan(d, grid);
  const BigInt closed = closed_form_max(d);
  Json j{{"command", "scan"}};
  j.update(to_json(sample));
  j["closed_form_max"] = to_decimal(closed);
  j["relative_gap"] = std::abs(sample.max_modulus - closed.get_d()) / closed.get_d();
  j = common_fields(std::move(j), {{"d", d}, {"grid", grid}});
  j["elapsed_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  out << j.dump(2) << '\n';
  return kOk;
}

int run_asymptote(const TableArgs& args, const SharedOptions& shared, std::ostream& out) {
  std::vector<int> values = args.values;
  if (values.empty()) {
    if (args.table == "real") values = {1, 3, 5, 7};
    else if (args.table == "complex") values = args.k == 2 ? std::vector<int>{1, 3, 5, 7} : std::vector<int>{3};
    else values = {1, 2, 3, 4, 5};
  }
  const std::map<std::string, std::string> params{
      {"table", args.table}, {"values", join(values)}, {"k", std::to_string(args.k)}};
  const Json body =
      cached_body(open_cache(shared), ResultCache::canonical_key("asymptote", params), [&] {
        std::vector<AsymptoteRow> rows;
        if (args.table == "real") rows = real_asymptote_table(values);
        else if (args.table == "complex") rows = complex_asymptote_table(values, args.k);
        else rows = incidence_asymptote_table(values);
        Json j;
        j["command"] = "asymptote";
        j["table"] = args.table;
        Json list = Json::array();
        for (const auto& row : rows) list.push_back(to_json(row));
        j["rows"] = std::move(list);
        Json p{{"table", args.table}, {"values", values}};
        if (args.table == "complex") p["k"] = args.k;
        return common_fields(std::move(j), std::move(p));
      });
  if (shared.format == "csv") {
    out << csv_header_asymptote() << '\n';
    for (const auto& row : body["rows"]) {
      AsymptoteRow r;
      r.family = row["family"].get<std::string>();
      r.parameter = row["parameter"].get<int>();
      r.value = from_decimal(row["value"].get<std::string>());
      r.exact_log = row["exact_log"].get<double>();
      r.prediction = row["prediction"].get<double>();
      if (!row["ratio"].is_null()) r.ratio = row["ratio"].get<double>();
      r.normalized_log = row["normalized_log"].get<double>();
      if (!row["bound"].is_null()) r.bound = row["bound"].get<double>();
      out << to_csv(r) << '\n';
    }
  } else {
    out << body.dump(2) << '\n';
  }
  return kOk;
}

int run_feasibility(const FeasibilityArgs& args, const SharedOptions& shared, std::ostream& out) {
  const Regime regime = parse_regime(args.regime);
  std::vector<int> ds = args.ds;
  std::vector<int> ks = args.ks;
  if (ds.empty()) for (int d = 1; d <= args.d_max; ++d) ds.push_back(d);
  if (ks.empty()) for (int k = 1; k <= args.k_max; ++k) ks.push_back(k);
  std::vector<Feasibility> rows;
  for (int k : ks) {
    for (int d : ds) rows.push_back(feasibility(d, k, regime));
  }
  if (shared.format == "csv") {
    out << csv_header_feasibility() << '\n';
    for (const auto& f : rows) out << to_csv(f) << '\n';
    return kOk;
  }
  Json list = Json::array();
  for (const auto& f : rows) list.push_back(to_json(f));
  Json j{{"command", "feasibility"}, {"regime", args.regime}, {"rows", std::move(list)}};
  j = common_fields(std::move(j), {{"regime", args.regime}, {"d", ds}, {"k", ks}});
  out << j.dump(2) << '\n';
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::EvenDegree:
    case ErrorCode::Infeasible:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidLength:
    case ErrorCode::NotInRectangle:
    case ErrorCode::NotEvenOrOdd:
    case ErrorCode::DegenerateAlternant:
      return kInfeasible;
    default:
      return kInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Schubert-calculus counts of projective subspaces on hypersurfaces",
               "schubert"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  SharedOptions shared;
  app.add_option("--format", shared.format, "Output format for tables")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache-dir", shared.cache_dir, "Result cache directory (default: $SCHUBERT_CACHE)");
  app.add_flag("--no-cache", shared.no_cache, "Neither read nor write the result cache");
  app.add_option("--grid", shared.grid, "Quadrature / scan nodes per axis");
  app.add_flag("--dump-poly", shared.dump_poly, "Include the root polynomial in the output");
  app.add_option("--threads", shared.threads, "Worker threads")->check(CLI::PositiveNumber);

  const auto regime_check = CLI::IsMember({"complex", "real"});

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Complex or real signed count of planes on a hypersurface");
  count->add_option("--regime", count_args.regime)->required()->check(regime_check);
  count->add_option("-d", count_args.d, "Degree of the hypersurface")->required()->check(CLI::PositiveNumber);
  count->add_option("-k", count_args.k, "Rank (complex) or half-rank (real)")->required()->check(CLI::PositiveNumber);

  std::string incidence_regime = "real";
  int incidence_n = 0;
  auto* incidence = app.add_subcommand("incidence", "3-planes meeting 2n generic (2n-1)-planes in lines");
  incidence->add_option("--regime", incidence_regime)->check(regime_check);
  incidence->add_option("-n", incidence_n)->required()->check(CLI::PositiveNumber);

  int cubic_r = 0;
  auto* cubic = app.add_subcommand("cubic-ci", "Real 3-planes on r generic cubics");
  cubic->add_option("-r", cubic_r)->required()->check(CLI::NonNegativeNumber);

  std::string schur_regime = "complex";
  std::vector<int> schur_parts;
  int schur_k = 0;
  auto* schur = app.add_subcommand("schur", "Print a complex or real Schur polynomial");
  schur->add_option("--regime", schur_regime)->check(regime_check);
  schur->add_option("--partition", schur_parts)->required()->delimiter(',');
  schur->add_option("-k", schur_k, "Number of variables");

  LambdaArgs lambda_args;
  auto* lambda = app.add_subcommand("lambda", "Schur coefficient of a root polynomial f_d");
  lambda->add_option("--regime", lambda_args.regime)->required()->check(regime_check);
  lambda->add_option("-d", lambda_args.d)->required()->check(CLI::PositiveNumber);
  lambda->add_option("-k", lambda_args.k)->required()->check(CLI::PositiveNumber);
  lambda->add_option("--partition", lambda_args.partition)->delimiter(',');
  lambda->add_flag("--numeric", lambda_args.numeric, "Also evaluate the Cauchy integral numerically");

  int scan_d = 0;
  auto* scan = app.add_subcommand("scan", "Scan F_d = f_d / (x1 x2)^m over the torus (k = 2)");
  scan->add_option("-d", scan_d)->required()->check(CLI::PositiveNumber);

  TableArgs table_args;
  auto* asymptote = app.add_subcommand("asymptote", "Log-scale asymptote tables");
  asymptote->add_option("--table", table_args.table)->required()->check(CLI::IsMember({"real", "complex", "incidence"}));
  asymptote->add_option("--values", table_args.values, "d (or n) values")->delimiter(',');
  asymptote->add_option("-k", table_args.k, "Rank for the complex table")->check(CLI::PositiveNumber);

  FeasibilityArgs feas_args;
  auto* feas = app.add_subcommand("feasibility", "Dimension-condition table");
  feas->add_option("--regime", feas_args.regime)->required()->check(regime_check);
  feas->add_option("-d", feas_args.ds)->delimiter(',');
  feas->add_option("-k", feas_args.ks)->delimiter(',');
  feas->add_option("--d-max", feas_args.d_max)->check(CLI::PositiveNumber);
  feas->add_option("--k-max", feas_args.k_max)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  set_max_threads(shared.threads);
  std::string command;
  try {
    if (count->parsed()) {
      command = "count";
      return run_count(count_args, shared, out);
    }
    if (incidence->parsed()) {
      command = "incidence";
      return run_incidence(incidence_regime, incidence_n, shared, out);
    }
    if (cubic->parsed()) {
      command = "cubic-ci";
      return run_cubic_ci(cubic_r, shared, out);
    }
    if (schur->parsed()) {
      command = "schur";
      return run_schur(schur_regime, schur_parts, schur_k, shared, out);
    }
    if (lambda->parsed()) {
      command = "lambda";
      return run_lambda(lambda_args, shared, out);
    }
    if (scan->parsed()) {
      command = "scan";
      return run_scan(scan_d, shared, out);
    }
    if (asymptote->parsed()) {
      command = "asymptote";
      return run_asymptote(table_args, shared, out);
    }
    if (feas->parsed()) {
      command = "feasibility";
      return run_feasibility(feas_args, shared, out);
    }
  } catch (const UsageError& e) {
    err << "schubert: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    Json j{{"command", command},
           {"error", e.what()},
           {"code", std::string(to_string(e.code()))},
           {"engine_version", engine_version()}};
    out << j.dump(2) << '\n';
    err << "schubert " << command << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "schubert " << command << ": internal error: " << e.what() << '\n';
    return kInternal;
  }
  err << app.help();
  return kUsage;
}

}  // namespace schubert::cli
