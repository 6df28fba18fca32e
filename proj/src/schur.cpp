#include "schubert/schur.hpp"

#include <algorithm>
#include <numeric>

#include "schubert/error.hpp"

namespace schubert {

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

/// Coefficient of z^target in f * V_base, where V_base is the alternant with
/// exponents `base`: sum over permutations t of sign(t) * [z^{target - t(base)}] f.
BigInt alternant_coefficient(const SparsePoly& f, std::span<const int> target,
                             std::span<const int> base) {
  const std::size_t k = target.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    ExponentVector e(k);
    bool valid = true;
    for (std::size_t i = 0; i < k && valid; ++i) {
      const int diff = target[i] - base[perm[i]];
      if (diff < 0) valid = false;
      else e[i] = static_cast<ExponentVector::value_type>(diff);
    }
    if (!valid) continue;
    const BigInt c = coefficient_at(f, e);
    if (sgn(c) == 0) continue;
    if (permutation_sign(perm) > 0) total += c;
    else total -= c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<int> staircase_exponents(std::size_t k, int step) {
  std::vector<int> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = step * static_cast<int>(k - 1 - i);
  return out;
}

std::vector<int> real_profile(const Partition& alpha) {
  std::vector<int> profile(alpha.length() / 2);
  for (std::size_t i = 0; i < profile.size(); ++i) profile[i] = alpha[2 * i];
  return profile;
}

void require_even_or_odd(const Partition& alpha) {
  if (classify_partition(alpha).kind == PartitionParity::Kind::Neither) {
    throw Error(ErrorCode::NotEvenOrOdd, alpha.str() + " is neither an even nor an odd partition");
  }
}

}  // namespace

bool in_euler_pontryagin(const SparsePoly& f) {
  for (const auto& t : f.terms()) {
    const std::size_t k = t.exponents.size();
    if (k == 0) continue;
    const auto parity = t.exponents[0] % 2;
    for (std::size_t i = 1; i < k; ++i) {
      if (t.exponents[i] % 2 != parity) return false;
    }
  }
  return is_symmetric(f);
}

RootPolynomial RootPolynomial::complex(SparsePoly poly) {
  if (!is_symmetric(poly)) {
    throw Error(ErrorCode::NotSymmetric, "complex root polynomial must be symmetric");
  }
  return RootPolynomial(std::move(poly), Regime::Complex);
}

RootPolynomial RootPolynomial::real(SparsePoly poly) {
  if (!in_euler_pontryagin(poly)) {
    throw Error(ErrorCode::NotEulerPontryagin,
                "real root polynomial must lie in the Euler-Pontryagin ring");
  }
  return RootPolynomial(std::move(poly), Regime::Real);
}

SparsePoly vandermonde(std::span<const int> exponents, std::size_t k) {
  if (exponents.size() != k) {
    throw Error(ErrorCode::InvalidLength, "vandermonde: exponent sequence length differs from k");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (exponents[i] < 0 || (i + 1 < k && exponents[i] <= exponents[i + 1])) {
      throw Error(ErrorCode::DegenerateAlternant,
                  "vandermonde: exponents must be strictly decreasing and non-negative");
    }
  }
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    // Variable perm[i] carries exponent exponents[i].
    ExponentVector e(k);
    for (std::size_t i = 0; i < k; ++i) {
      e[perm[i]] = static_cast<ExponentVector::value_type>(exponents[i]);
    }
    terms.push_back({e, BigInt(permutation_sign(perm))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SparsePoly::from_terms(k, std::move(terms));
}

RootPolynomial schur_polynomial(const Partition& alpha, std::size_t k) {
  if (alpha.length() != k) {
    throw Error(ErrorCode::InvalidLength,
                "schur_polynomial: " + alpha.str() + " does not have length " + std::to_string(k));
  }
  const auto delta = staircase_exponents(k, 1);
  std::vector<int> shifted(k);
  for (std::size_t i = 0; i < k; ++i) shifted[i] = alpha[i] + delta[i];
  return RootPolynomial::complex(exact_div(vandermonde(shifted, k), vandermonde(delta, k)));
}

SchurCoefficient schur_coefficient(const RootPolynomial& f, const Partition& alpha) {
  if (f.regime() != Regime::Complex) {
    throw Error(ErrorCode::InvalidArgument, "schur_coefficient expects a complex root polynomial");
  }
  const std::size_t k = f.variables();
  if (alpha.length() != k) {
    throw Error(ErrorCode::InvalidLength,
                "schur_coefficient: " + alpha.str() + " does not have length " + std::to_string(k));
  }
  const auto delta = staircase_exponents(k, 1);
  std::vector<int> target(k);
  for (std::size_t i = 0; i < k; ++i) target[i] = alpha[i] + delta[i];
  return {alpha, alternant_coefficient(f.poly(), target, delta), true};
}

RootPolynomial real_schur_polynomial(const Partition& alpha, std::size_t k) {
  if (alpha.length() != 2 * k) {
    throw Error(ErrorCode::InvalidLength, "real_schur_polynomial: " + alpha.str() +
                                              " does not have length " + std::to_string(2 * k));
  }
  require_even_or_odd(alpha);
  const auto profile = real_profile(alpha);
  const auto two_delta = staircase_exponents(k, 2);
  std::vector<int> shifted(k);
  for (std::size_t i = 0; i < k; ++i) shifted[i] = profile[i] + two_delta[i];
  return RootPolynomial::real(exact_div(vandermonde(shifted, k), vandermonde(two_delta, k)));
}

SchurCoefficient real_schur_coefficient(const RootPolynomial& f, const Partition& alpha) {
  if (f.regime() != Regime::Real) {
    throw Error(ErrorCode::NotEulerPontryagin,
                "real_schur_coefficient expects a root polynomial in the Euler-Pontryagin ring");
  }
  const std::size_t k = f.variables();
  if (alpha.length() != 2 * k) {
    throw Error(ErrorCode::InvalidLength, "real_schur_coefficient: " + alpha.str() +
                                              " does not have length " + std::to_string(2 * k));
  }
  require_even_or_odd(alpha);
  const auto profile = real_profile(alpha);
  const auto two_delta = staircase_exponents(k, 2);
  std::vector<int> target(k);
  for (std::size_t i = 0; i < k; ++i) target[i] = profile[i] + two_delta[i];
  return {alpha, alternant_coefficient(f.poly(), target, two_delta), false};
}

BigInt duality_pairing(const Partition& alpha, const Partition& beta, int m, std::size_t k) {
  if (alpha.length() != k || beta.length() != k) {
    throw Error(ErrorCode::InvalidLength, "duality_pairing: partitions must have length k");
  }
  if (alpha.largest() > m || beta.largest() > m) {
    throw Error(ErrorCode::NotInRectangle, "duality_pairing: " + alpha.str() + " or " +
                                               beta.str() + " exceeds m = " + std::to_string(m));
  }
  const auto product = schur_polynomial(alpha, k).poly() * schur_polynomial(beta, k).poly();
  return schur_coefficient(RootPolynomial::complex(product), Partition::constant(k, m)).value;
}

}  // namespace schubert
