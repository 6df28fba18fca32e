#include <doctest.h>

#include <cmath>
#include <numeric>

#include "schubert/error.hpp"
#include "schubert/schur.hpp"
#include "support.hpp"

using namespace schubert;
using testsupport::kSeed;
using testsupport::tableaux_schur;

namespace {

std::vector<int> as_vector(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

SparsePoly symmetrize(const SparsePoly& f) {
  std::vector<std::size_t> perm(f.variables());
  std::iota(perm.begin(), perm.end(), 0);
  SparsePoly sym(f.variables());
  do {
    sym += testsupport::permute_variables(f, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sym;
}

/// Random homogeneous symmetric polynomial of degree n in k variables.
SparsePoly random_symmetric(std::mt19937& rng, std::size_t k, int n) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Term> terms;
  for (const auto& c : compositions(n, static_cast<int>(k))) {
    if (rng() % 3 == 0) terms.push_back({ExponentVector(std::span<const int>(c.parts)), coeff(rng)});
  }
  return symmetrize(SparsePoly::from_terms(k, std::move(terms)));
}

SparsePoly product_of_variables(std::size_t k) {
  return SparsePoly::monomial(ExponentVector(std::vector<int>(k, 1)));
}

}  // namespace

TEST_CASE("vandermonde of the staircase is the difference product") {
  for (std::size_t k = 1; k <= 5; ++k) {
    SparsePoly expected = SparsePoly::constant(k, 1);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        expected = expected * (SparsePoly::variable(k, i) - SparsePoly::variable(k, j));
      }
    }
    const auto delta = Partition::staircase(k);
    CHECK(vandermonde(delta.parts(), k) == expected);
  }
  const std::vector<int> repeated{2, 2, 0};
  CHECK_THROWS_AS(vandermonde(repeated, 3), Error);
  const std::vector<int> two{1, 0};
  CHECK_THROWS_AS(vandermonde(two, 3), Error);
}

TEST_CASE("bialternant agrees with semistandard tableaux") {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (int n = 0; n <= 6; ++n) {
      for (const auto& a : partitions_in_box(n, k, n)) {
        CAPTURE(a.str());
        CHECK(schur_polynomial(a, k).poly() == tableaux_schur(as_vector(a), k));
      }
    }
  }
  CHECK_THROWS_AS(schur_polynomial(Partition{1, 1, 1}, 2), Error);
}

TEST_CASE("schur coefficients are dual to the schur basis") {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 6; ++n) {
      const auto box = partitions_in_box(n, k, n);
      for (const auto& b : box) {
        const auto s = RootPolynomial::complex(tableaux_schur(as_vector(b), k));
        for (const auto& a : box) {
          const auto lambda = schur_coefficient(s, a);
          CHECK(lambda.sign_certain);
          CHECK(lambda.value == (a == b ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("schur coefficients reconstruct symmetric polynomials") {
  std::mt19937 rng(kSeed + 11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 2 + trial % 3;
    const int n = 1 + trial % 6;
    const auto f = random_symmetric(rng, k, n);
    const auto root = RootPolynomial::complex(f);
    SparsePoly rebuilt(k);
    for (const auto& a : partitions_in_box(n, k, n)) {
      rebuilt += schur_coefficient(root, a).value * tableaux_schur(as_vector(a), k);
    }
    CHECK(rebuilt == f);
  }
}

TEST_CASE("f_3 for lines") {
  const auto f = RootPolynomial::complex(
      SparsePoly::from_terms(2, {{{3, 1}, 18}, {{2, 2}, 45}, {{1, 3}, 18}}));
  // coefficient of z1^3 z2^2 in f (z1 - z2): 45 - 18
  CHECK(schur_coefficient(f, Partition{2, 2}).value == 27);
  CHECK(schur_coefficient(f, Partition{3, 1}).value == 18);
  CHECK(schur_coefficient(f, Partition{4, 0}).value == 0);
}

TEST_CASE("root polynomial factories") {
  const auto x = SparsePoly::variable(2, 0);
  const auto y = SparsePoly::variable(2, 1);
  CHECK_THROWS_AS(RootPolynomial::complex(x), Error);
  CHECK_NOTHROW(RootPolynomial::complex(x + y));
  // symmetric but mixes odd and even exponents
  CHECK_FALSE(in_euler_pontryagin(x * x * y + x * y * y));
  CHECK_THROWS_AS(RootPolynomial::real(x + y), Error);
  CHECK(in_euler_pontryagin(x * x + y * y));
  CHECK(in_euler_pontryagin(x * y));
  CHECK(in_euler_pontryagin(x * x * y * y + x * y));
  CHECK_FALSE(in_euler_pontryagin(x * x * y * y * y + x * x * x * y * y));
}

TEST_CASE("real schur polynomials from tableaux") {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& b : partitions_in_box(n, k, n)) {
        const auto even = b.scaled(2).doubled_length();
        const auto odd = b.scaled(2, 1).doubled_length();
        const auto s2 = tableaux_schur(as_vector(b), k, true);
        CAPTURE(b.str());
        CHECK(real_schur_polynomial(even, k).poly() == s2);
        CHECK(real_schur_polynomial(odd, k).poly() == product_of_variables(k) * s2);
      }
    }
  }
  CHECK_THROWS_AS(real_schur_polynomial(Partition{3, 2, 1, 0}, 2), Error);
  CHECK_THROWS_AS(real_schur_polynomial(Partition{2, 2}, 2), Error);
}

TEST_CASE("real schur coefficients are dual and bridge to the complex ones") {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 4; ++n) {
      const auto box = partitions_in_box(n, k, n);
      for (const auto& b : box) {
        const auto s2 = RootPolynomial::real(tableaux_schur(as_vector(b), k, true));
        for (const auto& a : box) {
          const auto lambda = real_schur_coefficient(s2, a.scaled(2).doubled_length());
          CHECK_FALSE(lambda.sign_certain);
          CHECK(abs(lambda.value) == (a == b ? 1 : 0));
        }
      }
    }
  }
  // g(x^2) against an even partition reads off lambda_b(g)
  std::mt19937 rng(kSeed + 12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 2 + trial % 2;
    const int n = 1 + trial % 4;
    const auto g = random_symmetric(rng, k, n);
    const auto g2 = RootPolynomial::real(substitute_squares(g));
    for (const auto& b : partitions_in_box(n, k, n)) {
      const auto real = real_schur_coefficient(g2, b.scaled(2).doubled_length());
      const auto complex = schur_coefficient(RootPolynomial::complex(g), b);
      CHECK(abs(real.value) == abs(complex.value));
    }
  }
}

TEST_CASE("duality pairing") {
  CHECK(duality_pairing(Partition{1, 0}, Partition{1, 0}, 1, 2) == 1);
  CHECK(duality_pairing(Partition{1, 0}, Partition{0, 0}, 1, 2) == 0);
  // on G(2,4) sigma_2 and sigma_{1,1} are self-dual and orthogonal
  CHECK(duality_pairing(Partition{2, 0}, Partition{2, 0}, 2, 2) == 1);
  CHECK(duality_pairing(Partition{1, 1}, Partition{1, 1}, 2, 2) == 1);
  CHECK(duality_pairing(Partition{2, 0}, Partition{1, 1}, 2, 2) == 0);
  CHECK(duality_pairing(Partition{2, 0}, Partition{2, 2}, 2, 2) == 0);
  CHECK(duality_pairing(Partition{2, 1}, Partition{1, 0}, 2, 2) == 1);
  CHECK_THROWS_AS(duality_pairing(Partition{3, 0}, Partition{0, 0}, 2, 2), Error);
}

TEST_CASE("quadrature reproduces exact coefficients") {
  std::mt19937 rng(kSeed + 13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 2 + trial % 2;
    const int n = 2 + trial % 4;
    const auto f = RootPolynomial::complex(random_symmetric(rng, k, n));
    for (const auto& a : partitions_in_box(n, k, n)) {
      const double exact = schur_coefficient(f, a).value.get_d();
      const auto numeric = numeric_schur_coefficient(f, a);
      CHECK(std::abs(numeric.real() - exact) < 1e-9 * (1.0 + std::abs(exact)));
      CHECK(std::abs(numeric.imag()) < 1e-9 * (1.0 + std::abs(exact)));
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t k = 2;
    const int n = 1 + trial % 3;
    const auto g = random_symmetric(rng, k, n);
    const auto f = RootPolynomial::real(substitute_squares(g));
    for (const auto& b : partitions_in_box(n, k, n)) {
      const auto a = b.scaled(2).doubled_length();
      const double exact = real_schur_coefficient(f, a).value.get_d();
      const auto numeric = numeric_schur_coefficient(f, a);
      CHECK(std::abs(numeric.real() - exact) < 1e-9 * (1.0 + std::abs(exact)));
    }
  }
}

TEST_CASE("linear-form integrand matches the expanded product") {
  const std::vector<std::vector<long>> forms{{3, 0}, {2, 1}, {1, 2}, {0, 3}};
  const auto expanded = make_integrand(product_of_linear_forms(2, forms));
  const auto pointwise = make_linear_form_integrand(2, forms);
  CHECK(expanded.degree_bound == pointwise.degree_bound);
  const auto roots = roots_of_unity(11);
  for (std::size_t i = 0; i < 11; ++i) {
    for (std::size_t j = 0; j < 11; ++j) {
      const std::vector<std::size_t> node{i, j};
      CHECK(std::abs(expanded.evaluate(node, roots) - pointwise.evaluate(node, roots)) < 1e-10);
    }
  }
  const auto alpha = Partition{2, 2};
  CHECK(quadrature_threshold(pointwise, alpha, Regime::Complex) ==
        quadrature_threshold(expanded, alpha, Regime::Complex));
  const auto numeric = numeric_schur_coefficient(pointwise, alpha, Regime::Complex);
  CHECK(numeric.real() == doctest::Approx(27.0).epsilon(1e-12));
}
