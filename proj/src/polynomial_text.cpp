#include <cctype>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

std::string to_text(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) out += " + ";
    first = false;
    out += to_decimal(t.coeff);
    out += " *";
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      out += " x" + std::to_string(i + 1) + "^" + std::to_string(t.exponents[i]);
    }
  }
  return out;
}

namespace {

[[noreturn]] void parse_failure(const std::string& detail) {
  throw Error(ErrorCode::ParseError, "malformed polynomial text: " + detail);
}

Term parse_term(const std::string& text, std::size_t variables) {
  std::istringstream in(text);
  std::string coeff;
  std::string star;
  if (!(in >> coeff >> star) || star != "*") parse_failure("'" + text + "'");
  Term t{ExponentVector(variables), from_decimal(coeff)};
  for (std::size_t i = 0; i < variables; ++i) {
    std::string factor;
    if (!(in >> factor)) parse_failure("missing variable in '" + text + "'");
    const std::string prefix = "x" + std::to_string(i + 1) + "^";
    if (factor.rfind(prefix, 0) != 0) parse_failure("expected " + prefix + " in '" + text + "'");
    const std::string digits = factor.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      parse_failure("bad exponent in '" + text + "'");
    }
    t.exponents[i] = static_cast<ExponentVector::value_type>(std::stoul(digits));
  }
  std::string extra;
  if (in >> extra) parse_failure("trailing input in '" + text + "'");
  return t;
}

}  // namespace

SparsePoly parse_poly(const std::string& text, std::size_t variables) {
  if (text == "0") return SparsePoly(variables);
  std::vector<Term> terms;
  std::size_t start = 0;
  const std::string sep = " + ";
  while (true) {
    const std::size_t pos = text.find(sep, start);
    terms.push_back(parse_term(text.substr(start, pos == std::string::npos ? pos : pos - start),
                               variables));
    if (pos == std::string::npos) break;
    start = pos + sep.size();
  }
  return SparsePoly::from_terms(variables, std::move(terms));
}

}  // namespace schubert
