#include "schubert/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <numbers>
#include <unordered_map>

#include "schubert/error.hpp"
#include "schubert/parallel.hpp"

namespace schubert {

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(std::size_t variables) {
  if (variables > kMaxVariables) {
    throw Error(ErrorCode::InvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  size_ = static_cast<std::uint8_t>(variables);
}

ExponentVector::ExponentVector(std::span<const int> exponents) : ExponentVector(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) {
      throw Error(ErrorCode::InvalidArgument, "negative exponent in monomial");
    }
    e_[i] = static_cast<value_type>(exponents[i]);
  }
}

std::uint64_t ExponentVector::total_degree() const noexcept {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < size_; ++i) s += e_[i];
  return s;
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

std::size_t ExponentVector::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= e_[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out = a;
  for (std::size_t i = 0; i < a.size_; ++i) out.e_[i] += b.e_[i];
  return out;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out = a;
  for (std::size_t i = 0; i < a.size_; ++i) out.e_[i] -= b.e_[i];
  return out;
}

bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) noexcept {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// ---------------------------------------------------------------------------
// SparsePoly

namespace {

void require_same_arity(const SparsePoly& f, const SparsePoly& g, const char* op) {
  if (f.variables() != g.variables()) {
    throw Error(ErrorCode::ArityMismatch, std::string(op) + ": polynomials in " +
                                              std::to_string(f.variables()) + " and " +
                                              std::to_string(g.variables()) + " variables");
  }
}

using TermMap = std::map<ExponentVector, BigInt, GradedLexGreater>;

TermMap to_map(const SparsePoly& f) {
  TermMap m;
  for (const auto& t : f.terms()) m.emplace_hint(m.end(), t.exponents, t.coeff);
  return m;
}

void subtract_scaled_shift(TermMap& rem, const SparsePoly& g, const ExponentVector& shift,
                           const BigInt& c) {
  for (const auto& t : g.terms()) {
    auto [it, inserted] = rem.try_emplace(shift + t.exponents);
    mpz_submul(it->second.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
    if (sgn(it->second) == 0) rem.erase(it);
  }
}

}  // namespace

SparsePoly::SparsePoly(std::size_t variables) : variables_(variables) {
  if (variables > kMaxVariables) {
    throw Error(ErrorCode::InvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

SparsePoly SparsePoly::constant(std::size_t variables, const BigInt& c) {
  SparsePoly p(variables);
  if (sgn(c) != 0) p.terms_.push_back({ExponentVector(variables), c});
  return p;
}

SparsePoly SparsePoly::monomial(const ExponentVector& e, const BigInt& c) {
  SparsePoly p(e.size());
  if (sgn(c) != 0) p.terms_.push_back({e, c});
  return p;
}

SparsePoly SparsePoly::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) {
    throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  }
  ExponentVector e(variables);
  e[index] = 1;
  return monomial(e);
}

SparsePoly SparsePoly::from_terms(std::size_t variables, std::vector<Term> terms) {
  SparsePoly p(variables);
  for (const auto& t : terms) {
    if (t.exponents.size() != variables) {
      throw Error(ErrorCode::ArityMismatch, "term arity does not match polynomial arity");
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return graded_lex_less(b.exponents, a.exponents);
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

const Term& SparsePoly::leading_term() const {
  if (terms_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "the zero polynomial has no leading term");
  }
  return terms_.front();
}

std::uint64_t SparsePoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().exponents.total_degree();
}

std::uint64_t SparsePoly::min_total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.back().exponents.total_degree();
}

std::uint32_t SparsePoly::degree_in(std::size_t i) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[i]);
  return d;
}

bool SparsePoly::is_homogeneous() const noexcept {
  return terms_.empty() || total_degree() == min_total_degree();
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& g) { return *this = add(*this, g); }
SparsePoly& SparsePoly::operator-=(const SparsePoly& g) { return *this = sub(*this, g); }
SparsePoly& SparsePoly::operator*=(const SparsePoly& g) { return *this = mul(*this, g); }

SparsePoly add(const SparsePoly& f, const SparsePoly& g) {
  require_same_arity(f, g, "add");
  SparsePoly out(f.variables());
  out.terms_.reserve(f.size() + g.size());
  auto a = f.terms_.begin();
  auto b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != f.terms_.end() && graded_lex_less(b->exponents, a->exponents))) {
      out.terms_.push_back(*a++);
    } else if (a == f.terms_.end() || graded_lex_less(a->exponents, b->exponents)) {
      out.terms_.push_back(*b++);
    } else {
      BigInt c = a->coeff + b->coeff;
      if (sgn(c) != 0) out.terms_.push_back({a->exponents, std::move(c)});
      ++a;
      ++b;
    }
  }
  return out;
}

SparsePoly sub(const SparsePoly& f, const SparsePoly& g) { return add(f, -g); }

SparsePoly scale(const SparsePoly& f, const BigInt& c) {
  if (sgn(c) == 0) return SparsePoly(f.variables());
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  for (auto& t : terms) t.coeff *= c;
  return SparsePoly::from_terms(f.variables(), std::move(terms));
}

SparsePoly mul(const SparsePoly& f, const SparsePoly& g) {
  require_same_arity(f, g, "mul");
  SparsePoly out(f.variables());
  if (f.is_zero() || g.is_zero()) return out;

  // A monomial factor preserves the term order, so no re-sorting is needed.
  if (f.size() == 1 || g.size() == 1) {
    const Term& mono = f.size() == 1 ? f.terms_.front() : g.terms_.front();
    const SparsePoly& other = f.size() == 1 ? g : f;
    out.terms_.reserve(other.size());
    for (const auto& t : other.terms_) {
      out.terms_.push_back({t.exponents + mono.exponents, t.coeff * mono.coeff});
    }
    return out;
  }

  std::unordered_map<ExponentVector, BigInt, ExponentHash> acc;
  acc.reserve(2 * (f.size() + g.size()));
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      auto [it, inserted] = acc.try_emplace(a.exponents + b.exponents);
      mpz_addmul(it->second.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (sgn(c) != 0) out.terms_.push_back({e, std::move(c)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& a, const Term& b) {
    return graded_lex_less(b.exponents, a.exponents);
  });
  return out;
}

SparsePoly pow(const SparsePoly& f, unsigned n) {
  SparsePoly result = SparsePoly::constant(f.variables(), 1);
  SparsePoly base = f;
  while (n > 0) {
    if (n & 1u) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

namespace {

SparsePoly product_range(const std::vector<SparsePoly>& factors, std::size_t lo, std::size_t hi,
                         unsigned threads) {
  if (hi - lo == 1) return factors[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  if (threads > 1) {
    auto left = std::async(std::launch::async, product_range, std::cref(factors), lo, mid,
                           threads / 2);
    SparsePoly right = product_range(factors, mid, hi, threads - threads / 2);
    return mul(left.get(), right);
  }
  return mul(product_range(factors, lo, mid, 1), product_range(factors, mid, hi, 1));
}

}  // namespace

SparsePoly product_of_linear_forms(std::size_t variables,
                                   const std::vector<std::vector<long>>& coeffs) {
  std::vector<SparsePoly> factors;
  factors.reserve(coeffs.size());
  for (const auto& form : coeffs) {
    if (form.size() != variables) {
      throw Error(ErrorCode::ArityMismatch, "linear form of length " + std::to_string(form.size()) +
                                                " in " + std::to_string(variables) + " variables");
    }
    std::vector<Term> terms;
    for (std::size_t i = 0; i < variables; ++i) {
      if (form[i] == 0) continue;
      ExponentVector e(variables);
      e[i] = 1;
      terms.push_back({e, BigInt(form[i])});
    }
    factors.push_back(SparsePoly::from_terms(variables, std::move(terms)));
  }
  if (factors.empty()) return SparsePoly::constant(variables, 1);
  return product_range(factors, 0, factors.size(), max_threads());
}

BigInt coefficient_at(const SparsePoly& f, const ExponentVector& e) {
  if (e.size() != f.variables()) {
    throw Error(ErrorCode::ArityMismatch, "coefficient_at: exponent vector of length " +
                                              std::to_string(e.size()) + " for a polynomial in " +
                                              std::to_string(f.variables()) + " variables");
  }
  const auto terms = f.terms();
  auto it = std::lower_bound(terms.begin(), terms.end(), e, [](const Term& t, const ExponentVector& x) {
    return graded_lex_less(x, t.exponents);
  });
  if (it != terms.end() && it->exponents == e) return it->coeff;
  return 0;
}

SparsePoly exact_div(const SparsePoly& f, const SparsePoly& g) {
  require_same_arity(f, g, "exact_div");
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "exact_div: division by zero");
  TermMap rem = to_map(f);
  const Term& lead = g.leading_term();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    const auto& [e, c] = *rem.begin();
    if (!lead.exponents.divides(e) || !mpz_divisible_p(c.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw Error(ErrorCode::NotDivisible, "exact_div: nonzero remainder");
    }
    Term q{e - lead.exponents, 0};
    mpz_divexact(q.coeff.get_mpz_t(), c.get_mpz_t(), lead.coeff.get_mpz_t());
    subtract_scaled_shift(rem, g, q.exponents, q.coeff);
    quotient.push_back(std::move(q));
  }
  return SparsePoly::from_terms(f.variables(), std::move(quotient));
}

SparsePoly exact_sqrt(const SparsePoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "exact_sqrt of the zero polynomial");
  const std::size_t k = f.variables();
  const Term& top = f.leading_term();
  ExponentVector root_exp(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (top.exponents[i] % 2 != 0) {
      throw Error(ErrorCode::NotAPerfectSquare, "exact_sqrt: leading monomial is not a square");
    }
    root_exp[i] = top.exponents[i] / 2;
  }
  if (sgn(top.coeff) < 0 || !mpz_perfect_square_p(top.coeff.get_mpz_t())) {
    throw Error(ErrorCode::NotAPerfectSquare, "exact_sqrt: leading coefficient is not a square");
  }
  BigInt root_coeff;
  mpz_sqrt(root_coeff.get_mpz_t(), top.coeff.get_mpz_t());

  // Invariant: rem == f - r^2 where r holds the terms found so far. The next
  // term t of r satisfies LT(rem) == 2 * LT(r) * t.
  SparsePoly root = SparsePoly::monomial(root_exp, root_coeff);
  TermMap rem = to_map(f);
  rem.erase(rem.begin());
  const BigInt twice_lead = 2 * root_coeff;
  const std::uint64_t lowest = f.min_total_degree();
  std::vector<Term> found{{root_exp, root_coeff}};
  while (!rem.empty()) {
    const auto& [e, c] = *rem.begin();
    if (!root_exp.divides(e) || !mpz_divisible_p(c.get_mpz_t(), twice_lead.get_mpz_t())) {
      throw Error(ErrorCode::NotAPerfectSquare, "exact_sqrt: remainder does not reduce");
    }
    Term next{e - root_exp, 0};
    mpz_divexact(next.coeff.get_mpz_t(), c.get_mpz_t(), twice_lead.get_mpz_t());
    if (!graded_lex_less(next.exponents, found.back().exponents) ||
        2 * next.exponents.total_degree() < lowest) {
      throw Error(ErrorCode::NotAPerfectSquare, "exact_sqrt: remainder does not reduce");
    }
    // rem -= 2 * r * next + next^2
    subtract_scaled_shift(rem, root, next.exponents, 2 * next.coeff);
    subtract_scaled_shift(rem, SparsePoly::monomial(next.exponents, next.coeff), next.exponents,
                          next.coeff);
    root = add(root, SparsePoly::monomial(next.exponents, next.coeff));
    found.push_back(std::move(next));
  }
  return root;
}

SparsePoly substitute_squares(const SparsePoly& f) {
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  for (auto& t : terms) {
    for (std::size_t i = 0; i < t.exponents.size(); ++i) t.exponents[i] *= 2;
  }
  return SparsePoly::from_terms(f.variables(), std::move(terms));
}

bool is_symmetric(const SparsePoly& f) {
  struct Orbit {
    BigInt coeff;
    std::size_t members = 0;
  };
  std::map<std::vector<std::uint32_t>, Orbit> orbits;
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> key(t.exponents.size());
    for (std::size_t i = 0; i < key.size(); ++i) key[i] = t.exponents[i];
    std::sort(key.begin(), key.end(), std::greater<>());
    auto [it, inserted] = orbits.try_emplace(std::move(key), Orbit{t.coeff, 0});
    if (it->second.coeff != t.coeff) return false;
    ++it->second.members;
  }
  for (const auto& [key, orbit] : orbits) {
    // Number of distinct permutations of `key` is the multinomial k! / prod(mult!).
    BigInt distinct = factorial(key.size());
    for (std::size_t i = 0; i < key.size();) {
      std::size_t j = i;
      while (j < key.size() && key[j] == key[i]) ++j;
      distinct /= factorial(j - i);
      i = j;
    }
    if (distinct != orbit.members) return false;
  }
  return true;
}

std::complex<double> eval_torus(const SparsePoly& f, const TorusPoint& p) {
  if (p.angles.size() != f.variables()) {
    throw Error(ErrorCode::ArityMismatch, "eval_torus: point dimension does not match");
  }
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  std::complex<long double> sum{0.0L, 0.0L};
  for (const auto& t : f.terms()) {
    long double phase = 0.0L;
    for (std::size_t i = 0; i < p.angles.size(); ++i) {
      phase += static_cast<long double>(t.exponents[i]) * static_cast<long double>(p.angles[i]);
    }
    phase = std::fmod(phase, two_pi);
    sum += static_cast<long double>(t.coeff.get_d()) * std::polar(1.0L, phase);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::complex<double> eval_on_grid(const SparsePoly& f, std::span<const std::size_t> node,
                                  std::span<const std::complex<double>> roots) {
  const std::size_t grid = roots.size();
  std::complex<long double> sum{0.0L, 0.0L};
  for (const auto& t : f.terms()) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < node.size(); ++i) {
      index = (index + (static_cast<std::size_t>(t.exponents[i]) % grid) * node[i]) % grid;
    }
    const auto z = roots[index];
    sum += static_cast<long double>(t.coeff.get_d()) *
           std::complex<long double>(z.real(), z.imag());
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::vector<std::complex<double>> roots_of_unity(std::size_t grid) {
  std::vector<std::complex<double>> roots(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    const long double angle =
        2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) / grid;
    roots[j] = {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
    // Quarter-turn nodes are set exactly.
    if (4 * j % grid == 0) {
      const std::size_t quarter = 4 * j / grid;
      static constexpr std::complex<double> exact[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      roots[j] = exact[quarter];
    }
  }
  return roots;
}

}  // namespace schubert
