#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/bigint.hpp"

namespace schubert {

/// Extrema of F_d = f_d / (x1 x2)^m over grid x grid nodes of the torus T^2 (k = 2).
struct TorusSample {
  int d = 0;
  std::size_t grid = 0;
  double min_modulus = 0.0;
  double max_modulus = 0.0;
  bool sign_constant = false;  // sign of Re F_d over the grid, with |Im F_d| <= 1e-8 max
  int sign = 0;                // that sign, when constant
  double max_imag_ratio = 0.0;  // max |Im F_d| / max |F_d|
  std::vector<std::pair<double, double>> argmax_angles;
};

TorusSample torus_scan(int d, std::size_t grid);

/// M_d = C_d prod_{i} prod_{l1<l2, l1+l2=d-2i, l1,l2>=1} (l1^2 + l2^2)^{2(i+1)},
/// C_d = [d!! (d-2)!! ...]^2.
BigInt closed_form_max(int d);

struct AsymptoteRow {
  std::string family;
  int parameter = 0;
  BigInt value;
  double exact_log = 0.0;   // natural log of value
  double prediction = 0.0;
  std::optional<double> ratio;  // exact_log / prediction; absent when prediction == 0
  double normalized_log = 0.0;  // exact_log per unit of the growth parameter (see family)
  std::optional<double> bound;  // rigorous upper bound on exact_log, where one is known
};

/// log N_d^e against d^3 log d / 12, k = 2.
std::vector<AsymptoteRow> real_asymptote_table(const std::vector<int>& ds);

/// log N_{d,k}^C against d^{k-1} log d / (k-1)!. The finite-d bound
/// binom(d+k-1, k-1) log d (every root factor has modulus <= d on the torus)
/// is reported in `bound`; growth conjectures are reported, never asserted.
std::vector<AsymptoteRow> complex_asymptote_table(const std::vector<int>& ds, int k);

/// Families "incidence-complex" (against 2n log 20) and "incidence-real"
/// (against 2n log 2); normalized_log is log(value) / (2n).
std::vector<AsymptoteRow> incidence_asymptote_table(const std::vector<int>& ns);

}  // namespace schubert
