#include "schubert/bigint.hpp"

#include <climits>
#include <cmath>

#include "schubert/error.hpp"

namespace schubert {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::NotInRectangle: return "NotInRectangle";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotAPerfectSquare: return "NotAPerfectSquare";
    case ErrorCode::DegenerateAlternant: return "DegenerateAlternant";
    case ErrorCode::NotEvenOrOdd: return "NotEvenOrOdd";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotEulerPontryagin: return "NotEulerPontryagin";
    case ErrorCode::EvenDegree: return "EvenDegree";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

double log_abs(const BigInt& value) {
  if (sgn(value) == 0) {
    throw Error(ErrorCode::InvalidArgument, "logarithm of zero");
  }
  signed long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt from_decimal(const std::string& text) {
  BigInt value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a decimal integer: '" + text + "'");
  }
  return value;
}

int to_int(const BigInt& value) {
  if (!value.fits_sint_p()) {
    throw Error(ErrorCode::InvalidArgument, "integer out of range: " + to_decimal(value));
  }
  return static_cast<int>(value.get_si());
}

}  // namespace schubert
