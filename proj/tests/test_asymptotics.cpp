#include <doctest.h>

#include <cmath>
#include <numbers>

#include "schubert/asymptotics.hpp"
#include "schubert/enumerate.hpp"
#include "schubert/error.hpp"
#include "schubert/parallel.hpp"

using namespace schubert;

namespace {

/// |f_d| at (1, i), where the maximum of |F_d| is attained.
double modulus_at_quarter_turn(int d) {
  const auto f = real_root_poly(d, 2).poly();
  return std::abs(eval_torus(f, TorusPoint{{0.0, std::numbers::pi / 2}}));
}

double angular_distance(double a, double b) {
  const double two_pi = 2 * std::numbers::pi;
  double x = std::fmod(std::abs(a - b), two_pi);
  return std::min(x, two_pi - x);
}

}  // namespace

TEST_CASE("closed-form maximum") {
  CHECK(closed_form_max(1) == 1);
  CHECK(closed_form_max(3) == 225);
  for (int d : {3, 5, 7}) {
    const double direct = modulus_at_quarter_turn(d);
    CHECK(closed_form_max(d).get_d() == doctest::Approx(direct).epsilon(1e-12));
  }
  double previous = INFINITY;
  for (int d : {3, 5, 7, 9, 11}) {
    const double ratio = log_abs(closed_form_max(d)) / (std::pow(d, 3) * std::log(d) / 12);
    CHECK(ratio < previous);
    CHECK(ratio > 1.0);
    previous = ratio;
  }
  CHECK_THROWS_AS(closed_form_max(4), Error);
}

TEST_CASE("torus scan converges to the closed form") {
  for (int d : {3, 5, 7}) {
    const auto sample = torus_scan(d, 720);
    const double m = closed_form_max(d).get_d();
    CHECK(std::abs(sample.max_modulus - m) / m <= 1e-4);
    CHECK(sample.sign_constant);
    CHECK(sample.max_imag_ratio < 1e-8);
    const double cell = 2 * std::numbers::pi / 720;
    for (const auto& [a, b] : sample.argmax_angles) {
      const double dist = std::min(angular_distance(a - b, std::numbers::pi / 2),
                                   angular_distance(a - b, -std::numbers::pi / 2));
      CHECK(dist <= cell + 1e-12);
    }
  }
}

TEST_CASE("torus scan sign is constant for small degrees") {
  for (int d : {1, 3, 5, 7}) {
    const auto sample = torus_scan(d, 128);
    CHECK(sample.sign_constant);
    CHECK(std::abs(sample.sign) == 1);
    CHECK(sample.min_modulus > 0.0);
    CHECK(sample.min_modulus <= sample.max_modulus);
  }
}

TEST_CASE("scan results do not depend on the thread count") {
  set_max_threads(1);
  const auto a = torus_scan(5, 256);
  set_max_threads(3);
  const auto b = torus_scan(5, 256);
  set_max_threads(1);
  CHECK(a.max_modulus == b.max_modulus);
  CHECK(a.min_modulus == b.min_modulus);
  CHECK(a.argmax_angles == b.argmax_angles);
}

TEST_CASE("torus scan arguments") {
  CHECK_THROWS_AS(torus_scan(2, 360), Error);
  CHECK_THROWS_AS(torus_scan(3, 32), Error);
}

TEST_CASE("real asymptote table") {
  const auto rows = real_asymptote_table({1, 3, 5, 7});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].prediction == 0.0);
  CHECK_FALSE(rows[0].ratio.has_value());
  CHECK(*rows[1].ratio == doctest::Approx(std::log(189.0) / (27.0 / 12 * std::log(3.0))));
  CHECK(*rows[1].ratio == doctest::Approx(2.1205).epsilon(0.001 / 2.1205));
  CHECK(*rows[2].ratio == doctest::Approx(1.4526).epsilon(0.001 / 1.4526));
  CHECK(*rows[1].ratio > *rows[2].ratio);
  CHECK(*rows[2].ratio > *rows[3].ratio);
  CHECK(rows[3].value == *real_count(7, 2).value);
}

TEST_CASE("complex asymptote table") {
  const auto rows = complex_asymptote_table({3, 5}, 4);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].value == 321489);
  CHECK(rows[0].exact_log == doctest::Approx(std::log(321489.0)));
  // log(6.4127725294951805931404297113125e31)
  const double expected = std::log(6.4127725294951805931404297113125) + 31 * std::log(10.0);
  CHECK(rows[1].exact_log == doctest::Approx(expected).epsilon(1e-12));
  CHECK(rows[1].prediction == doctest::Approx(125.0 / 6 * std::log(5.0)));
  for (const auto& r : rows) {
    REQUIRE(r.bound.has_value());
    CHECK(r.exact_log <= *r.bound);
  }
  const auto lines = complex_asymptote_table({3}, 2);
  CHECK(lines[0].exact_log == doctest::Approx(std::log(27.0)));
}

TEST_CASE("incidence asymptote table") {
  const auto rows = incidence_asymptote_table({1, 5, 8});
  REQUIRE(rows.size() == 6);
  double real5 = 0.0;
  double real8 = 0.0;
  for (const auto& r : rows) {
    if (r.family == "incidence-complex" && r.parameter == 1) CHECK(r.normalized_log == 0.0);
    if (r.family == "incidence-real") {
      CHECK(r.normalized_log < std::log(2.0));
      if (r.parameter == 5) real5 = r.normalized_log;
      if (r.parameter == 8) real8 = r.normalized_log;
    }
    if (r.family == "incidence-complex") CHECK(r.normalized_log < std::log(20.0));
  }
  CHECK(real5 == doctest::Approx(std::log(42.0) / 10));
  CHECK(real8 == doctest::Approx(std::log(1430.0) / 16));
  CHECK(real8 > real5);
}
