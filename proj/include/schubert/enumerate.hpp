#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "schubert/combinatorics.hpp"
#include "schubert/schur.hpp"

namespace schubert {

struct Orientability {
  bool grassmannian = false;     // G_rank(R^{rank+m}) orientable
  bool sym_power = false;        // Sym^d of the tautological dual bundle orientable
  bool euler_number_defined = false;
};

/// An exact enumerative answer. In the real regime `value` is the absolute
/// value of the signed count.
struct CountReport {
  Regime regime = Regime::Complex;
  std::vector<int> degrees;  // one entry, or r entries for complete intersections
  int k = 0;                 // rank (complex) or half-rank (real)
  std::optional<int> m;
  std::optional<BigInt> value;  // absent iff !feasible
  bool feasible = false;
  std::optional<Orientability> orientability;
  std::chrono::duration<double, std::milli> elapsed{0};
};

bool grassmannian_orientable(int k, int m);
bool sym_power_orientable(int d, int k);
bool euler_number_defined(int d, int k, int m);

/// Coefficient vectors of the linear forms l_1 z_1 + ... + l_k z_k, one per
/// composition of d into k parts.
std::vector<std::vector<long>> complex_root_factors(int d, int k);

/// Coefficient vectors (l_1 - l_1', ..., l_k - l_k') for every composition of
/// d into 2k parts (l_1, l_1', ..., l_k, l_k').
std::vector<std::vector<long>> real_root_factors(int d, int k);

/// f_d: the product of all complex root factors.
RootPolynomial complex_root_poly(int d, int k);

CountReport complex_count(int d, int k);

/// (-1)^{N/2} times the product of all real root factors, N = binom(d+2k-1, 2k-1).
/// Throws EvenDegree for even d.
SparsePoly real_square_poly(int d, int k);

/// Exact square root of real_square_poly, with positive leading coefficient.
RootPolynomial real_root_poly(int d, int k);

/// Closed factored form of real_root_poly(d, 2):
///   prod_{i=0}^{(d-1)/2} [ (d-2i)^2 x1 x2 prod_{l1<l2, l1+l2=d-2i}
///                          (l1^2 x1^2 - l2^2 x2^2)(l2^2 x1^2 - l1^2 x2^2) ]^{i+1}
RootPolynomial factored_real_root_poly(int d);

CountReport real_count(int d, int k);

/// Signed count of real 3-planes on r generic cubics in P^{5r+3}, in absolute value.
CountReport cubic_ci_real(int r);

/// sum_j a_j C_j where 9^r (25 - 4t)^r = sum_j a_j t^j.
BigInt catalan_substitution(int r);

/// |lambda_{(2n,2n,2n,2n)}((x1^2 + x2^2)^{2n})|.
BigInt incidence_real(int n);

/// lambda_{(2n,2n,2n,2n)}(s_{(2,2,0,0)}^{2n}) in four variables.
BigInt incidence_complex(int n);

}  // namespace schubert
