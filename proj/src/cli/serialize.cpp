#include <cmath>
#include <sstream>

#include "schubert/cli.hpp"

namespace schubert::cli {

namespace {

std::string format_double(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

}  // namespace

Json to_json(const Feasibility& f) {
  Json j;
  j["d"] = f.d;
  j["k"] = f.k;
  j["regime"] = to_string(f.regime);
  j["feasible"] = f.feasible();
  j["m"] = f.m ? Json(*f.m) : Json(nullptr);
  j["d_odd"] = f.d_odd;
  return j;
}

Json to_json(const TorusSample& sample) {
  Json j;
  j["d"] = sample.d;
  j["grid"] = sample.grid;
  j["min_modulus"] = sample.min_modulus;
  j["max_modulus"] = sample.max_modulus;
  j["sign_constant"] = sample.sign_constant;
  j["sign"] = sample.sign;
  j["max_imag_ratio"] = sample.max_imag_ratio;
  Json angles = Json::array();
  for (const auto& [a, b] : sample.argmax_angles) angles.push_back(Json::array({a, b}));
  j["argmax_count"] = sample.argmax_angles.size();
  j["argmax_angles"] = std::move(angles);
  return j;
}

Json to_json(const AsymptoteRow& row) {
  Json j;
  j["family"] = row.family;
  j["parameter"] = row.parameter;
  j["value"] = to_decimal(row.value);
  j["exact_log"] = row.exact_log;
  j["exact_log10"] = row.exact_log / std::log(10.0);
  j["prediction"] = row.prediction;
  j["ratio"] = row.ratio ? Json(*row.ratio) : Json(nullptr);
  j["normalized_log"] = row.normalized_log;
  j["bound"] = row.bound ? Json(*row.bound) : Json(nullptr);
  if (row.bound) j["within_bound"] = row.exact_log <= *row.bound;
  return j;
}

Json to_json(const CountReport& report, const std::string& command) {
  Json j;
  j["command"] = command;
  j["regime"] = to_string(report.regime);
  if (report.degrees.size() == 1) {
    j["d"] = report.degrees.front();
  } else {
    j["d"] = report.degrees;
  }
  j["k"] = report.k;
  j["m"] = report.m ? Json(*report.m) : Json(nullptr);
  j["value"] = report.value ? Json(to_decimal(*report.value)) : Json(nullptr);
  j["feasible"] = report.feasible;
  if (report.orientability) {
    j["orientable_grassmannian"] = report.orientability->grassmannian;
    j["sym_power_orientable"] = report.orientability->sym_power;
    j["euler_number_defined"] = report.orientability->euler_number_defined;
  }
  return j;
}

std::string csv_header_asymptote() {
  return "family,parameter,value,exact_log,exact_log10,prediction,ratio,normalized_log,bound";
}

std::string to_csv(const AsymptoteRow& row) {
  std::string s = row.family + "," + std::to_string(row.parameter) + "," + to_decimal(row.value) +
                  "," + format_double(row.exact_log) + "," +
                  format_double(row.exact_log / std::log(10.0)) + "," +
                  format_double(row.prediction) + ",";
  if (row.ratio) s += format_double(*row.ratio);
  s += "," + format_double(row.normalized_log) + ",";
  if (row.bound) s += format_double(*row.bound);
  return s;
}

std::string csv_header_feasibility() { return "d,k,regime,feasible,m,d_odd"; }

std::string to_csv(const Feasibility& f) {
  return std::to_string(f.d) + "," + std::to_string(f.k) + "," + to_string(f.regime) + "," +
         (f.feasible() ? "true" : "false") + "," + (f.m ? std::to_string(*f.m) : "") + "," +
         (f.d_odd ? "true" : "false");
}

}  // namespace schubert::cli
