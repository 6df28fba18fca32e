#pragma once

// Test-side oracles and generators. Nothing here calls into the code under
// test except for the polynomial container itself.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "schubert/polynomial.hpp"

namespace testsupport {

using schubert::BigInt;
using schubert::ExponentVector;
using schubert::SparsePoly;
using schubert::Term;

inline constexpr std::uint32_t kSeed = 20240611u;

/// Schur polynomial s_shape(z_1..z_k) as a sum over semistandard tableaux.
/// With `square` every exponent is doubled, i.e. s_shape(z_1^2, ..., z_k^2).
class TableauxSchur {
 public:
  TableauxSchur(std::vector<int> shape, std::size_t k, bool square = false)
      : shape_(std::move(shape)), k_(k), step_(square ? 2 : 1) {
    for (std::size_t r = 0; r < shape_.size(); ++r) {
      for (int c = 0; c < shape_[r]; ++c) cells_.push_back({r, c});
    }
    filling_.assign(shape_.size(), std::vector<int>());
    for (std::size_t r = 0; r < shape_.size(); ++r) filling_[r].assign(shape_[r], 0);
  }

  SparsePoly run() {
    content_.assign(k_, 0);
    fill(0);
    std::vector<Term> terms;
    for (const auto& [e, c] : acc_) terms.push_back({ExponentVector(std::span<const int>(e)), c});
    return SparsePoly::from_terms(k_, std::move(terms));
  }

 private:
  void fill(std::size_t idx) {
    if (idx == cells_.size()) {
      acc_[content_] += 1;
      return;
    }
    const auto [r, c] = cells_[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, filling_[r][c - 1]);
    if (r > 0) lo = std::max(lo, filling_[r - 1][c] + 1);
    for (int v = lo; v <= static_cast<int>(k_); ++v) {
      filling_[r][c] = v;
      content_[v - 1] += step_;
      fill(idx + 1);
      content_[v - 1] -= step_;
    }
  }

  std::vector<int> shape_;
  std::size_t k_;
  int step_;
  std::vector<std::pair<std::size_t, int>> cells_;
  std::vector<std::vector<int>> filling_;
  std::vector<int> content_;
  std::map<std::vector<int>, BigInt> acc_;
};

inline SparsePoly tableaux_schur(const std::vector<int>& shape, std::size_t k, bool square = false) {
  return TableauxSchur(shape, k, square).run();
}

/// C_0..C_n by the convolution recursion.
inline std::vector<BigInt> catalan_table(unsigned n) {
  std::vector<BigInt> c(n + 1, 0);
  c[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  }
  return c;
}

inline BigInt double_factorial(long n) {
  BigInt r = 1;
  for (long i = n; i > 1; i -= 2) r *= i;
  return r;
}

/// Random sparse polynomial with small coefficients.
inline SparsePoly random_poly(std::mt19937& rng, std::size_t variables, int max_terms,
                              int max_exp, int max_coeff = 9) {
  std::uniform_int_distribution<int> n_terms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::vector<Term> terms;
  const int n = n_terms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> e(variables);
    for (auto& x : e) x = exp(rng);
    terms.push_back({ExponentVector(std::span<const int>(e)), coeff(rng)});
  }
  return SparsePoly::from_terms(variables, std::move(terms));
}

inline SparsePoly random_nonzero_poly(std::mt19937& rng, std::size_t variables, int max_terms,
                                      int max_exp) {
  for (;;) {
    SparsePoly f = random_poly(rng, variables, max_terms, max_exp);
    if (!f.is_zero()) return f;
  }
}

/// Swaps the variables of f according to `perm`.
inline SparsePoly permute_variables(const SparsePoly& f, const std::vector<std::size_t>& perm) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    ExponentVector e(f.variables());
    for (std::size_t i = 0; i < f.variables(); ++i) e[perm[i]] = t.exponents[i];
    terms.push_back({e, t.coeff});
  }
  return SparsePoly::from_terms(f.variables(), std::move(terms));
}

}  // namespace testsupport
