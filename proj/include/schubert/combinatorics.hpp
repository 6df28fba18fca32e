#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schubert/bigint.hpp"

namespace schubert {

enum class Regime { Complex, Real };

std::string to_string(Regime regime);
Regime parse_regime(const std::string& text);

/// Weakly decreasing sequence of non-negative integers with a fixed declared
/// length. Trailing zeros are stored, so a length-k and a length-2k partition
/// with the same non-zero parts are different values.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// The constant partition (value, ..., value) of the given length.
  static Partition constant(std::size_t length, int value);

  /// The staircase (length-1, ..., 1, 0).
  static Partition staircase(std::size_t length);

  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept;  // sum of the parts
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  std::span<const int> parts() const noexcept { return parts_; }

  /// Each part repeated twice: (a, b, ...) -> (a, a, b, b, ...).
  Partition doubled_length() const;

  /// Every part multiplied by `factor` and then shifted by `shift`.
  Partition scaled(int factor, int shift = 0) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct Composition {
  std::vector<int> parts;
  int total = 0;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Result of recognising a 2k-partition as 2b(2) (even) or 2b(2)+1 (odd).
struct PartitionParity {
  enum class Kind { Even, Odd, Neither };

  Kind kind = Kind::Neither;
  std::optional<Partition> witness;  // the length-k partition b; set unless Neither

  friend bool operator==(const PartitionParity&, const PartitionParity&) = default;
};

struct Feasibility {
  int d = 0;
  int k = 0;  // rank in the complex regime, half-rank in the real regime
  Regime regime = Regime::Complex;
  std::optional<int> m;
  bool d_odd = false;

  bool feasible() const noexcept { return m.has_value(); }
};

/// All k-tuples of non-negative integers summing to d, in graded
/// lexicographic order (first coordinate largest first).
std::vector<Composition> compositions(int d, int k);

PartitionParity classify_partition(const Partition& alpha);

/// The m-complement: beta with alpha_i + beta_{k+1-i} = m.
Partition complement(const Partition& alpha, int m, int k);

BigInt catalan(unsigned n);

Feasibility feasibility(int d, int k, Regime regime);

/// Every partition of `n` into at most `length` parts, each at most
/// `max_part`, padded to `length`; listed in decreasing lexicographic order.
std::vector<Partition> partitions_in_box(int n, std::size_t length, int max_part);

}  // namespace schubert
