#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "schubert/bigint.hpp"

namespace schubert {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponents of a monomial in a fixed number of variables (at most kMaxVariables).
class ExponentVector {
 public:
  using value_type = std::uint32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t variables);
  explicit ExponentVector(std::span<const int> exponents);
  ExponentVector(std::initializer_list<int> exponents)
      : ExponentVector(std::span<const int>(exponents.begin(), exponents.size())) {}

  std::size_t size() const noexcept { return size_; }
  value_type operator[](std::size_t i) const noexcept { return e_[i]; }
  value_type& operator[](std::size_t i) noexcept { return e_[i]; }

  std::uint64_t total_degree() const noexcept;

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const noexcept;

  std::size_t hash() const noexcept;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  /// Requires b.divides(a).
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::array<value_type, kMaxVariables> e_{};
  std::uint8_t size_ = 0;
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant.
bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) noexcept;

struct GradedLexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const noexcept {
    return graded_lex_less(b, a);
  }
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const noexcept { return e.hash(); }
};

struct Term {
  ExponentVector exponents;
  BigInt coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Terms are kept in strictly decreasing graded-lex order and
/// no stored coefficient is zero, so equality is structural.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::size_t variables);

  static SparsePoly constant(std::size_t variables, const BigInt& c);
  static SparsePoly monomial(const ExponentVector& e, const BigInt& c = 1);
  static SparsePoly variable(std::size_t variables, std::size_t index);
  /// Normalises arbitrary input: sorts, merges duplicates, drops zeros.
  static SparsePoly from_terms(std::size_t variables, std::vector<Term> terms);

  std::size_t variables() const noexcept { return variables_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Requires a non-zero polynomial.
  const Term& leading_term() const;
  std::uint64_t total_degree() const noexcept;
  std::uint64_t min_total_degree() const noexcept;
  /// Highest exponent of variable i appearing in any term.
  std::uint32_t degree_in(std::size_t i) const noexcept;
  bool is_homogeneous() const noexcept;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& g);
  SparsePoly& operator-=(const SparsePoly& g);
  SparsePoly& operator*=(const SparsePoly& g);

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  std::size_t variables_ = 0;
  std::vector<Term> terms_;

  friend SparsePoly add(const SparsePoly&, const SparsePoly&);
  friend SparsePoly mul(const SparsePoly&, const SparsePoly&);
};

SparsePoly add(const SparsePoly& f, const SparsePoly& g);
SparsePoly sub(const SparsePoly& f, const SparsePoly& g);
SparsePoly mul(const SparsePoly& f, const SparsePoly& g);
SparsePoly scale(const SparsePoly& f, const BigInt& c);
SparsePoly pow(const SparsePoly& f, unsigned n);

inline SparsePoly operator+(const SparsePoly& f, const SparsePoly& g) { return add(f, g); }
inline SparsePoly operator-(const SparsePoly& f, const SparsePoly& g) { return sub(f, g); }
inline SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) { return mul(f, g); }
inline SparsePoly operator*(const BigInt& c, const SparsePoly& f) { return scale(f, c); }

/// Product of the linear forms sum_i coeffs[j][i] * z_i in `variables`
/// variables. The factors are multiplied in a balanced binary tree; the two
/// halves of a node may run on separate threads (see max_threads()), which
/// cannot change the exact result.
SparsePoly product_of_linear_forms(std::size_t variables,
                                   const std::vector<std::vector<long>>& coeffs);

BigInt coefficient_at(const SparsePoly& f, const ExponentVector& e);

/// q with q * g == f. Multivariate division in graded-lex order; throws
/// NotDivisible unless the remainder vanishes.
SparsePoly exact_div(const SparsePoly& f, const SparsePoly& g);

/// r with r * r == f and a positive leading coefficient. Throws
/// NotAPerfectSquare otherwise.
SparsePoly exact_sqrt(const SparsePoly& f);

/// Replaces every variable x_i by x_i^2.
SparsePoly substitute_squares(const SparsePoly& f);

/// Invariant under every permutation of the variables.
bool is_symmetric(const SparsePoly& f);

struct TorusPoint {
  std::vector<double> angles;
};

/// Value at (e^{i a_1}, ..., e^{i a_k}). Each monomial is evaluated as
/// e^{i <e, a>} from its reduced phase, and terms are summed in stored
/// (decreasing graded-lex) order in extended precision.
std::complex<double> eval_torus(const SparsePoly& f, const TorusPoint& p);

/// Value at the grid node z_i = roots[node[i]], where roots holds the G-th
/// roots of unity. Exponents are reduced modulo G, so the result carries no
/// phase error from large powers.
std::complex<double> eval_on_grid(const SparsePoly& f, std::span<const std::size_t> node,
                                  std::span<const std::complex<double>> roots);

/// Table of exp(2*pi*i*j/G), j = 0..G-1.
std::vector<std::complex<double>> roots_of_unity(std::size_t grid);

/// Canonical text: terms in decreasing graded-lex order joined by " + ",
/// each written `c * x1^e1 x2^e2 ... xk^ek` with every exponent present;
/// the zero polynomial is `0`.
std::string to_text(const SparsePoly& f);
SparsePoly parse_poly(const std::string& text, std::size_t variables);

}  // namespace schubert
