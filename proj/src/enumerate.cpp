#include "schubert/enumerate.hpp"

#include "schubert/error.hpp"

namespace schubert {

namespace {

using Clock = std::chrono::steady_clock;

void require_odd(int d, const char* op) {
  if (d % 2 == 0) {
    throw Error(ErrorCode::EvenDegree,
                std::string(op) + ": even degree d = " + std::to_string(d) +
                    " is excluded in the real regime (the Euler number either vanishes or is "
                    "defined only modulo 2)");
  }
}

void require_positive(int value, const char* what) {
  if (value < 1) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
  }
}

Orientability orientability_for(int d, int rank, int m) {
  return {grassmannian_orientable(rank, m), sym_power_orientable(d, rank),
          euler_number_defined(d, rank, m)};
}

}  // namespace

bool grassmannian_orientable(int k, int m) { return (k + m) % 2 == 0; }

bool sym_power_orientable(int d, int k) {
  if (d < 0 || k < 1) return true;  // zero-dimensional bundle
  return mpz_even_p(binomial(static_cast<unsigned long>(d + k - 1), static_cast<unsigned long>(k)).get_mpz_t());
}

bool euler_number_defined(int d, int k, int m) {
  if (d < 1 || k < 1 || m < 0) return false;
  const BigInt rank = binomial(static_cast<unsigned long>(d + k - 1), static_cast<unsigned long>(k - 1));
  if (rank != BigInt(k) * m) return false;
  const long parity = static_cast<long>(k) + m - static_cast<long>(d) * m;
  return parity % 2 == 0;
}

std::vector<std::vector<long>> complex_root_factors(int d, int k) {
  require_positive(d, "d");
  require_positive(k, "k");
  std::vector<std::vector<long>> forms;
  for (const auto& c : compositions(d, k)) forms.emplace_back(c.parts.begin(), c.parts.end());
  return forms;
}

std::vector<std::vector<long>> real_root_factors(int d, int k) {
  require_positive(d, "d");
  require_positive(k, "k");
  std::vector<std::vector<long>> forms;
  for (const auto& c : compositions(d, 2 * k)) {
    std::vector<long> form(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) form[i] = c.parts[2 * i] - c.parts[2 * i + 1];
    forms.push_back(std::move(form));
  }
  return forms;
}

RootPolynomial complex_root_poly(int d, int k) {
  const auto forms = complex_root_factors(d, k);
  return RootPolynomial::complex(product_of_linear_forms(static_cast<std::size_t>(k), forms));
}

CountReport complex_count(int d, int k) {
  const auto start = Clock::now();
  const Feasibility f = feasibility(d, k, Regime::Complex);
  CountReport report;
  report.regime = Regime::Complex;
  report.degrees = {d};
  report.k = k;
  report.m = f.m;
  report.feasible = f.feasible();
  if (f.feasible()) {
    report.orientability = orientability_for(d, k, *f.m);
    const auto poly = complex_root_poly(d, k);
    report.value =
        schur_coefficient(poly, Partition::constant(static_cast<std::size_t>(k), *f.m)).value;
  }
  report.elapsed = Clock::now() - start;
  return report;
}

SparsePoly real_square_poly(int d, int k) {
  require_odd(d, "real_square_poly");
  const auto forms = real_root_factors(d, k);
  SparsePoly product = product_of_linear_forms(static_cast<std::size_t>(k), forms);
  // Odd d pairs each factor with its negative, so N is even.
  const std::size_t half = forms.size() / 2;
  if (half % 2 == 1) product = -product;
  return product;
}

RootPolynomial real_root_poly(int d, int k) {
  return RootPolynomial::real(exact_sqrt(real_square_poly(d, k)));
}

RootPolynomial factored_real_root_poly(int d) {
  require_positive(d, "d");
  require_odd(d, "factored_real_root_poly");
  const ExponentVector x1x2{1, 1};
  SparsePoly result = SparsePoly::constant(2, 1);
  for (int i = 0; i <= (d - 1) / 2; ++i) {
    const int s = d - 2 * i;
    SparsePoly block = SparsePoly::monomial(x1x2, BigInt(s) * s);
    for (int l1 = 1; 2 * l1 < s; ++l1) {
      const long l2 = s - l1;
      const long a = static_cast<long>(l1) * l1;
      const long b = l2 * l2;
      // (a x1^2 - b x2^2)(b x1^2 - a x2^2)
      const SparsePoly first = SparsePoly::from_terms(2, {{{2, 0}, a}, {{0, 2}, -b}});
      const SparsePoly second = SparsePoly::from_terms(2, {{{2, 0}, b}, {{0, 2}, -a}});
      block = block * first * second;
    }
    result = result * pow(block, static_cast<unsigned>(i + 1));
  }
  return RootPolynomial::real(std::move(result));
}

CountReport real_count(int d, int k) {
  const auto start = Clock::now();
  require_positive(d, "d");
  require_odd(d, "real_count");
  const Feasibility f = feasibility(d, k, Regime::Real);
  CountReport report;
  report.regime = Regime::Real;
  report.degrees = {d};
  report.k = k;
  report.m = f.m;
  report.feasible = f.feasible();
  if (f.feasible()) {
    report.orientability = orientability_for(d, 2 * k, *f.m);
    const auto poly = real_root_poly(d, k);
    const auto lambda =
        real_schur_coefficient(poly, Partition::constant(2 * static_cast<std::size_t>(k), *f.m));
    report.value = abs(lambda.value);
  }
  report.elapsed = Clock::now() - start;
  return report;
}

CountReport cubic_ci_real(int r) {
  const auto start = Clock::now();
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "r must be non-negative");
  CountReport report;
  report.regime = Regime::Real;
  report.degrees.assign(static_cast<std::size_t>(r), 3);
  report.k = 2;
  report.m = 5 * r;
  report.feasible = true;
  const SparsePoly f = pow(real_root_poly(3, 2).poly(), static_cast<unsigned>(r));
  const auto lambda =
      real_schur_coefficient(RootPolynomial::real(f), Partition::constant(4, 5 * r));
  report.value = abs(lambda.value);
  report.elapsed = Clock::now() - start;
  return report;
}

BigInt catalan_substitution(int r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "r must be non-negative");
  const auto ur = static_cast<unsigned long>(r);
  BigInt nine_r;
  mpz_ui_pow_ui(nine_r.get_mpz_t(), 9, ur);
  BigInt total = 0;
  for (unsigned long j = 0; j <= ur; ++j) {
    BigInt a;
    mpz_ui_pow_ui(a.get_mpz_t(), 25, ur - j);
    BigInt four_j;
    mpz_ui_pow_ui(four_j.get_mpz_t(), 4, j);
    a *= four_j * binomial(ur, j);
    if (j % 2 == 1) a = -a;
    total += a * catalan(static_cast<unsigned>(j));
  }
  return nine_r * total;
}

BigInt incidence_real(int n) {
  require_positive(n, "n");
  const SparsePoly p1 = SparsePoly::from_terms(2, {{{2, 0}, 1}, {{0, 2}, 1}});
  const auto f = RootPolynomial::real(pow(p1, static_cast<unsigned>(2 * n)));
  return abs(real_schur_coefficient(f, Partition::constant(4, 2 * n)).value);
}

BigInt incidence_complex(int n) {
  require_positive(n, "n");
  const auto sigma22 = schur_polynomial(Partition{2, 2, 0, 0}, 4);
  const auto f = RootPolynomial::complex(pow(sigma22.poly(), static_cast<unsigned>(2 * n)));
  return schur_coefficient(f, Partition::constant(4, 2 * n)).value;
}

}  // namespace schubert
