#include <algorithm>
#include <future>

#include "schubert/error.hpp"
#include "schubert/parallel.hpp"
#include "schubert/schur.hpp"

namespace schubert {

namespace {

using Complex = std::complex<double>;
using WideComplex = std::complex<long double>;

struct WeightSpec {
  SparsePoly schur;   // s_alpha (complex) or s_{alpha,R} (real)
  unsigned power = 1; // V = prod (z_i^power - z_j^power)
};

WeightSpec weight_for(const Partition& alpha, std::size_t k, Regime regime) {
  if (regime == Regime::Complex) return {schur_polynomial(alpha, k).poly(), 1};
  return {real_schur_polynomial(alpha, k).poly(), 2};
}

/// |V(z)|^2 with V = prod_{i<j} (z_i^p - z_j^p) at a grid node.
long double vandermonde_modulus_squared(std::span<const std::size_t> node,
                                        std::span<const Complex> roots, unsigned power) {
  const std::size_t grid = roots.size();
  long double product = 1.0L;
  for (std::size_t i = 0; i < node.size(); ++i) {
    for (std::size_t j = i + 1; j < node.size(); ++j) {
      const Complex a = roots[(node[i] * power) % grid];
      const Complex b = roots[(node[j] * power) % grid];
      product *= static_cast<long double>(std::norm(a - b));
    }
  }
  return product;
}

/// Sum of the integrand over every node whose first index is `first`.
WideComplex slab_sum(const QuadratureIntegrand& f, const WeightSpec& weight,
                     std::span<const Complex> roots, std::size_t first) {
  const std::size_t k = f.variables;
  const std::size_t grid = roots.size();
  std::vector<std::size_t> node(k, 0);
  std::vector<std::size_t> conj_node(k, 0);
  node[0] = first;
  WideComplex sum{0.0L, 0.0L};
  while (true) {
    const long double w = vandermonde_modulus_squared(node, roots, weight.power);
    if (w != 0.0L) {
      for (std::size_t i = 0; i < k; ++i) conj_node[i] = (grid - node[i]) % grid;
      const Complex value = f.evaluate(node, roots);
      const Complex schur_conj = eval_on_grid(weight.schur, conj_node, roots);
      const WideComplex v(value.real(), value.imag());
      const WideComplex s(schur_conj.real(), schur_conj.imag());
      sum += v * s * w;
    }
    // Odometer over axes 1..k-1.
    std::size_t axis = 1;
    while (axis < k && ++node[axis] == grid) node[axis++] = 0;
    if (axis >= k) break;
  }
  return sum;
}

}  // namespace

QuadratureIntegrand make_integrand(const SparsePoly& f) {
  QuadratureIntegrand q;
  q.variables = f.variables();
  for (std::size_t i = 0; i < f.variables(); ++i) q.degree_bound.push_back(f.degree_in(i));
  q.evaluate = [f](std::span<const std::size_t> node, std::span<const Complex> roots) {
    return eval_on_grid(f, node, roots);
  };
  return q;
}

QuadratureIntegrand make_linear_form_integrand(std::size_t variables,
                                               std::vector<std::vector<long>> forms) {
  QuadratureIntegrand q;
  q.variables = variables;
  q.degree_bound.assign(variables, 0);
  for (const auto& form : forms) {
    if (form.size() != variables) {
      throw Error(ErrorCode::ArityMismatch, "linear form arity does not match");
    }
    for (std::size_t i = 0; i < variables; ++i) {
      if (form[i] != 0) ++q.degree_bound[i];
    }
  }
  q.evaluate = [forms = std::move(forms)](std::span<const std::size_t> node,
                                          std::span<const Complex> roots) {
    WideComplex product{1.0L, 0.0L};
    for (const auto& form : forms) {
      WideComplex value{0.0L, 0.0L};
      for (std::size_t i = 0; i < form.size(); ++i) {
        if (form[i] == 0) continue;
        const Complex z = roots[node[i]];
        value += static_cast<long double>(form[i]) * WideComplex(z.real(), z.imag());
      }
      product *= value;
    }
    return Complex(static_cast<double>(product.real()), static_cast<double>(product.imag()));
  };
  return q;
}

std::size_t quadrature_threshold(const QuadratureIntegrand& f, const Partition& alpha,
                                 Regime regime) {
  const std::size_t k = f.variables;
  const WeightSpec weight = weight_for(alpha, k, regime);
  // |V|^2 contributes exponents in [-w, w] per variable.
  const std::size_t w = weight.power * (k - 1);
  std::size_t top = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t positive = f.degree_bound[i] + w;
    const std::size_t negative = weight.schur.degree_in(i) + w;
    top = std::max({top, positive, negative});
  }
  return top + 1;
}

std::complex<double> numeric_schur_coefficient(const QuadratureIntegrand& f,
                                               const Partition& alpha, Regime regime,
                                               std::size_t grid) {
  const std::size_t k = f.variables;
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "integrand without variables");
  if (grid == 0) grid = quadrature_threshold(f, alpha, regime);
  const WeightSpec weight = weight_for(alpha, k, regime);
  const auto roots = roots_of_unity(grid);

  std::vector<WideComplex> slabs(grid);
  const unsigned threads = std::min<unsigned>(max_threads(), static_cast<unsigned>(grid));
  if (threads <= 1) {
    for (std::size_t j = 0; j < grid; ++j) slabs[j] = slab_sum(f, weight, roots, j);
  } else {
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t j = t; j < grid; j += threads) slabs[j] = slab_sum(f, weight, roots, j);
      }));
    }
    for (auto& w : workers) w.get();
  }
  WideComplex total{0.0L, 0.0L};
  for (const auto& s : slabs) total += s;

  long double norm = 1.0L;
  for (std::size_t i = 0; i < k; ++i) norm *= static_cast<long double>(grid);
  norm *= static_cast<long double>(factorial(k).get_d());
  total /= norm;
  return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

std::complex<double> numeric_schur_coefficient(const RootPolynomial& f, const Partition& alpha,
                                               std::size_t grid) {
  return numeric_schur_coefficient(make_integrand(f.poly()), alpha, f.regime(), grid);
}

}  // namespace schubert
