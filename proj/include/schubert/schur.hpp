#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "schubert/combinatorics.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// A cohomology class represented by its root polynomial.
///
/// Complex regime: symmetric in z_1..z_k. Real regime: a member of the
/// Euler-Pontryagin ring, i.e. symmetric with every monomial having either
/// all exponents even or all exponents odd. The factories enforce this.
class RootPolynomial {
 public:
  static RootPolynomial complex(SparsePoly poly);
  static RootPolynomial real(SparsePoly poly);

  const SparsePoly& poly() const noexcept { return poly_; }
  std::size_t variables() const noexcept { return poly_.variables(); }
  Regime regime() const noexcept { return regime_; }

  friend bool operator==(const RootPolynomial&, const RootPolynomial&) = default;

 private:
  RootPolynomial(SparsePoly poly, Regime regime) : poly_(std::move(poly)), regime_(regime) {}

  SparsePoly poly_;
  Regime regime_ = Regime::Complex;
};

bool in_euler_pontryagin(const SparsePoly& f);

struct SchurCoefficient {
  Partition partition;
  BigInt value;
  bool sign_certain = true;  // false in the real regime, where only |value| is canonical
};

/// Alternant sum_{t in S_k} sign(t) z_{t(1)}^{g_1} ... z_{t(k)}^{g_k}.
/// Throws DegenerateAlternant unless `exponents` is strictly decreasing and
/// non-negative.
SparsePoly vandermonde(std::span<const int> exponents, std::size_t k);

/// s_alpha = V_{alpha+delta} / V_delta.
RootPolynomial schur_polynomial(const Partition& alpha, std::size_t k);

/// lambda_alpha(f), read off as the coefficient of z^{alpha+delta} in
/// f * V_delta.
SchurCoefficient schur_coefficient(const RootPolynomial& f, const Partition& alpha);

/// Real Schur polynomial of an even or odd 2k-partition alpha = b(2):
/// V_{b+2delta} / V_{2delta} in k variables.
RootPolynomial real_schur_polynomial(const Partition& alpha, std::size_t k);

/// Coefficient of x^{b+2delta} in f * V_{2delta}, where b = (alpha_1,
/// alpha_3, ...) is the length-k profile of alpha. Defined up to sign only.
SchurCoefficient real_schur_coefficient(const RootPolynomial& f, const Partition& alpha);

/// Intersection number of the Schubert classes of alpha and beta on the
/// Grassmannian of k-planes in k+m space: lambda_{(m,...,m)}(s_alpha s_beta).
BigInt duality_pairing(const Partition& alpha, const Partition& beta, int m, std::size_t k);

// ---------------------------------------------------------------------------
// Numeric Cauchy-integral oracle.

/// A polynomial integrand for trapezoidal quadrature on a G^k grid of the
/// torus. `evaluate` receives the node as indices into the table of G-th
/// roots of unity.
struct QuadratureIntegrand {
  std::size_t variables = 0;
  std::vector<std::uint32_t> degree_bound;  // highest exponent of each variable
  std::function<std::complex<double>(std::span<const std::size_t> node,
                                     std::span<const std::complex<double>> roots)>
      evaluate;
};

QuadratureIntegrand make_integrand(const SparsePoly& f);

/// Evaluates the product of linear forms pointwise, without expanding it.
QuadratureIntegrand make_linear_form_integrand(std::size_t variables,
                                               std::vector<std::vector<long>> forms);

/// Smallest G for which the trapezoidal rule integrates
/// f * conj(s_alpha) * |V|^2 exactly: G must exceed the largest absolute
/// exponent of every variable in that Laurent polynomial.
std::size_t quadrature_threshold(const QuadratureIntegrand& f, const Partition& alpha,
                                 Regime regime);

/// (1 / (k! (2 pi i)^k)) * integral over T^k of f conj(s_alpha) V conj(V) dz/z,
/// with V = V_delta (complex) or V_{2delta} (real), by the trapezoidal rule on
/// `grid` nodes per axis. grid == 0 selects quadrature_threshold(). Slabs of
/// the first axis may run in parallel; they are summed in index order.
std::complex<double> numeric_schur_coefficient(const QuadratureIntegrand& f,
                                               const Partition& alpha, Regime regime,
                                               std::size_t grid = 0);

std::complex<double> numeric_schur_coefficient(const RootPolynomial& f, const Partition& alpha,
                                               std::size_t grid = 0);

}  // namespace schubert
