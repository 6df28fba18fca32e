#include "schubert/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "schubert/error.hpp"

namespace schubert {

std::string to_string(Regime regime) {
  return regime == Regime::Complex ? "complex" : "real";
}

Regime parse_regime(const std::string& text) {
  if (text == "complex") return Regime::Complex;
  if (text == "real") return Regime::Real;
  throw Error(ErrorCode::InvalidArgument, "unknown regime '" + text + "' (expected complex|real)");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw Error(ErrorCode::InvalidArgument, "partition with a negative part: " + str());
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw Error(ErrorCode::InvalidArgument, "partition is not weakly decreasing: " + str());
    }
  }
}

Partition Partition::constant(std::size_t length, int value) {
  return Partition(std::vector<int>(length, value));
}

Partition Partition::staircase(std::size_t length) {
  std::vector<int> parts(length);
  for (std::size_t i = 0; i < length; ++i) parts[i] = static_cast<int>(length - 1 - i);
  return Partition(std::move(parts));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::doubled_length() const {
  std::vector<int> out;
  out.reserve(2 * parts_.size());
  for (int p : parts_) {
    out.push_back(p);
    out.push_back(p);
  }
  return Partition(std::move(out));
}

Partition Partition::scaled(int factor, int shift) const {
  std::vector<int> out(parts_);
  for (int& p : out) p = factor * p + shift;
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void compositions_into(int remaining, std::size_t slot, std::vector<int>& current,
                       std::vector<Composition>& out, int total) {
  if (slot + 1 == current.size()) {
    current[slot] = remaining;
    out.push_back({current, total});
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    current[slot] = v;
    compositions_into(remaining - v, slot + 1, current, out, total);
  }
}

}  // namespace

std::vector<Composition> compositions(int d, int k) {
  if (d < 0 || k < 1) {
    throw Error(ErrorCode::InvalidArgument, "compositions need d >= 0 and k >= 1");
  }
  std::vector<Composition> out;
  out.reserve(binomial(static_cast<unsigned long>(d + k - 1), static_cast<unsigned long>(k - 1)).get_ui());
  std::vector<int> current(static_cast<std::size_t>(k), 0);
  compositions_into(d, 0, current, out, d);
  return out;
}

PartitionParity classify_partition(const Partition& alpha) {
  if (alpha.length() % 2 != 0) {
    throw Error(ErrorCode::InvalidLength,
                "classify_partition needs an even-length partition, got " + alpha.str());
  }
  const std::size_t k = alpha.length() / 2;
  std::vector<int> profile(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (alpha[2 * i] != alpha[2 * i + 1]) return {};
    profile[i] = alpha[2 * i];
  }
  const bool all_even = std::all_of(profile.begin(), profile.end(), [](int p) { return p % 2 == 0; });
  const bool all_odd = std::all_of(profile.begin(), profile.end(), [](int p) { return p % 2 == 1; });
  if (all_even) {
    for (int& p : profile) p /= 2;
    return {PartitionParity::Kind::Even, Partition(std::move(profile))};
  }
  if (all_odd) {
    for (int& p : profile) p = (p - 1) / 2;
    return {PartitionParity::Kind::Odd, Partition(std::move(profile))};
  }
  return {};
}

Partition complement(const Partition& alpha, int m, int k) {
  if (k < 0 || alpha.length() != static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::InvalidLength, "complement: partition " + alpha.str() +
                                              " does not have length " + std::to_string(k));
  }
  if (alpha.largest() > m) {
    throw Error(ErrorCode::NotInRectangle, "complement: " + alpha.str() + " does not fit in a " +
                                               std::to_string(k) + "x" + std::to_string(m) +
                                               " rectangle");
  }
  std::vector<int> beta(alpha.length());
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    beta[alpha.length() - 1 - i] = m - alpha[i];
  }
  return Partition(std::move(beta));
}

BigInt catalan(unsigned n) {
  return binomial(2ul * n, n) / (n + 1);
}

Feasibility feasibility(int d, int k, Regime regime) {
  if (d < 1 || k < 1) {
    throw Error(ErrorCode::InvalidArgument, "feasibility needs d >= 1 and k >= 1");
  }
  Feasibility f{d, k, regime, std::nullopt, d % 2 != 0};
  const int rank = regime == Regime::Complex ? k : 2 * k;
  const BigInt n = binomial(static_cast<unsigned long>(d + rank - 1), static_cast<unsigned long>(rank - 1));
  if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(rank))) {
    f.m = to_int(BigInt(n / rank));
  }
  return f;
}

namespace {

void partitions_into(int remaining, int cap, std::size_t slot, std::vector<int>& current,
                     std::vector<Partition>& out) {
  if (slot == current.size()) {
    if (remaining == 0) out.emplace_back(current);
    return;
  }
  const int slots_left = static_cast<int>(current.size() - slot);
  for (int v = std::min(cap, remaining); v >= 0; --v) {
    if (v * slots_left < remaining) break;
    current[slot] = v;
    partitions_into(remaining - v, v, slot + 1, current, out);
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int n, std::size_t length, int max_part) {
  std::vector<Partition> out;
  if (n < 0 || max_part < 0) return out;
  std::vector<int> current(length, 0);
  if (length == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  partitions_into(n, max_part, 0, current, out);
  return out;
}

}  // namespace schubert
