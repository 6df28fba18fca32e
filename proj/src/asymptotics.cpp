#include "schubert/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "schubert/enumerate.hpp"
#include "schubert/error.hpp"

namespace schubert {

TorusSample torus_scan(int d, std::size_t grid) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  if (d % 2 == 0) {
    throw Error(ErrorCode::EvenDegree, "torus_scan: F_d is defined for odd d only");
  }
  if (grid < 64) throw Error(ErrorCode::InvalidArgument, "torus_scan needs grid >= 64");

  const SparsePoly f = real_root_poly(d, 2).poly();
  const int m = *feasibility(d, 2, Regime::Real).m;
  const auto roots = roots_of_unity(grid);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(grid);

  std::vector<std::complex<double>> values(grid * grid);
  std::size_t node[2];
  for (std::size_t a = 0; a < grid; ++a) {
    for (std::size_t b = 0; b < grid; ++b) {
      node[0] = a;
      node[1] = b;
      // (x1 x2)^{-m} on the torus is the root with index -m (a + b) mod G.
      const std::size_t shift = (static_cast<std::size_t>(m) % grid) * ((a + b) % grid) % grid;
      values[a * grid + b] = eval_on_grid(f, node, roots) * roots[(grid - shift) % grid];
    }
  }

  TorusSample sample;
  sample.d = d;
  sample.grid = grid;
  sample.min_modulus = std::abs(values.front());
  for (const auto& v : values) {
    const double modulus = std::abs(v);
    sample.max_modulus = std::max(sample.max_modulus, modulus);
    sample.min_modulus = std::min(sample.min_modulus, modulus);
  }
  int sign = 0;
  bool constant = true;
  for (const auto& v : values) {
    sample.max_imag_ratio = std::max(sample.max_imag_ratio, std::abs(v.imag()) / sample.max_modulus);
    const int s = v.real() > 0 ? 1 : (v.real() < 0 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) constant = false;
    if (sign == 0) sign = s;
  }
  sample.sign_constant = constant && sample.max_imag_ratio <= 1e-8;
  sample.sign = sample.sign_constant ? sign : 0;
  for (std::size_t a = 0; a < grid; ++a) {
    for (std::size_t b = 0; b < grid; ++b) {
      if (std::abs(values[a * grid + b]) >= sample.max_modulus * (1.0 - 1e-9)) {
        sample.argmax_angles.emplace_back(step * static_cast<double>(a), step * static_cast<double>(b));
      }
    }
  }
  return sample;
}

BigInt closed_form_max(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  if (d % 2 == 0) throw Error(ErrorCode::EvenDegree, "closed_form_max is defined for odd d only");
  BigInt result = 1;
  for (int i = 0; i <= (d - 1) / 2; ++i) {
    const int s = d - 2 * i;
    const auto exponent = static_cast<unsigned long>(2 * (i + 1));
    BigInt factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(s), exponent);
    result *= factor;
    for (int l1 = 1; 2 * l1 < s; ++l1) {
      const int l2 = s - l1;
      mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(l1 * l1 + l2 * l2), exponent);
      result *= factor;
    }
  }
  return result;
}

namespace {

AsymptoteRow make_row(std::string family, int parameter, BigInt value, double prediction) {
  AsymptoteRow row;
  row.family = std::move(family);
  row.parameter = parameter;
  row.exact_log = log_abs(value);
  row.value = std::move(value);
  row.prediction = prediction;
  if (prediction != 0.0) row.ratio = row.exact_log / prediction;
  row.normalized_log = row.exact_log;
  return row;
}

}  // namespace

std::vector<AsymptoteRow> real_asymptote_table(const std::vector<int>& ds) {
  std::vector<AsymptoteRow> rows;
  for (int d : ds) {
    const CountReport report = real_count(d, 2);
    if (!report.feasible) {
      throw Error(ErrorCode::Infeasible, "d = " + std::to_string(d) + " is infeasible for k = 2");
    }
    const double dd = d;
    rows.push_back(make_row("real", d, *report.value, dd * dd * dd * std::log(dd) / 12.0));
  }
  return rows;
}

std::vector<AsymptoteRow> complex_asymptote_table(const std::vector<int>& ds, int k) {
  std::vector<AsymptoteRow> rows;
  const double k_fact = factorial(static_cast<unsigned long>(k - 1)).get_d();
  for (int d : ds) {
    const CountReport report = complex_count(d, k);
    if (!report.feasible) {
      throw Error(ErrorCode::Infeasible, "(d, k) = (" + std::to_string(d) + ", " +
                                             std::to_string(k) + ") is infeasible");
    }
    const double dd = d;
    AsymptoteRow row = make_row("complex", d, *report.value,
                                std::pow(dd, k - 1) * std::log(dd) / k_fact);
    row.bound = binomial(static_cast<unsigned long>(d + k - 1), static_cast<unsigned long>(k - 1)).get_d() *
                std::log(dd);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<AsymptoteRow> incidence_asymptote_table(const std::vector<int>& ns) {
  std::vector<AsymptoteRow> rows;
  for (int n : ns) {
    AsymptoteRow c = make_row("incidence-complex", n, incidence_complex(n), 2.0 * n * std::log(20.0));
    c.normalized_log = c.exact_log / (2.0 * n);
    rows.push_back(std::move(c));
  }
  for (int n : ns) {
    AsymptoteRow r = make_row("incidence-real", n, incidence_real(n), 2.0 * n * std::log(2.0));
    r.normalized_log = r.exact_log / (2.0 * n);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace schubert
