#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionkit {

/// Rank and level of a type-A fusion algebra: A_{N-1} at level k.
struct FusionContext {
  int N = 2;
  int k = 1;

  FusionContext() = default;
  FusionContext(int rank, int level) : N(rank), k(level) {
    if (N < 2) throw std::invalid_argument("FusionContext: N must be >= 2");
    if (k < 1) throw std::invalid_argument("FusionContext: k must be >= 1");
  }

  friend bool operator==(const FusionContext&, const FusionContext&) = default;
};

/// Weakly decreasing sequence of non-negative integers, stored without
/// trailing zeros. Row 0 is the longest row.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<std::int64_t> parts) : Partition(std::vector<std::int64_t>(parts)) {}
  explicit Partition(std::vector<std::int64_t> parts);

  /// Number of non-zero parts.
  std::size_t length() const { return parts_.size(); }
  /// Part i (0-based), zero past the end.
  std::int64_t operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::span<const std::int64_t> parts() const { return parts_; }
  std::int64_t boxes() const;
  bool empty() const { return parts_.empty(); }

  /// True iff the diagram fits in `rows` rows and `cols` columns.
  bool fits_in(std::int64_t rows, std::int64_t cols) const;
  bool contains(const Partition& inner) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
};

/// Order by number of boxes, then lexicographically on the parts.
struct GradedLex {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.boxes() != b.boxes()) return a.boxes() < b.boxes();
    return a < b;
  }
};

/// (outer)/(inner) with inner contained in outer.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition outer_, Partition inner_);

  std::int64_t boxes() const { return outer.boxes() - inner.boxes(); }
  std::size_t rows() const { return outer.length(); }
};

/// Occurrence counts (b_1, b_2, ...) of the entries 1, 2, ... of a filling.
/// Not required to be decreasing; trailing zeros are trimmed.
class Content {
 public:
  Content() = default;
  Content(std::initializer_list<std::int64_t> counts) : Content(std::vector<std::int64_t>(counts)) {}
  explicit Content(std::vector<std::int64_t> counts);

  std::size_t size() const { return counts_.size(); }
  std::int64_t operator[](std::size_t i) const { return i < counts_.size() ? counts_[i] : 0; }
  std::span<const std::int64_t> counts() const { return counts_; }
  std::int64_t total() const;

  friend auto operator<=>(const Content&, const Content&) = default;
  friend bool operator==(const Content&, const Content&) = default;

 private:
  std::vector<std::int64_t> counts_;
};

/// Dominant integral weight of A_{N-1}: coefficients (a_1, ..., a_{N-1}) on
/// the fundamental weights. The rank is coeffs().size() + 1.
class Weight {
 public:
  Weight() = default;
  Weight(std::initializer_list<std::int64_t> coeffs) : Weight(std::vector<std::int64_t>(coeffs)) {}
  explicit Weight(std::vector<std::int64_t> coeffs);

  static Weight zero(int N) { return Weight(std::vector<std::int64_t>(static_cast<std::size_t>(N - 1), 0)); }

  int rank() const { return static_cast<int>(coeffs_.size()) + 1; }
  std::int64_t operator[](std::size_t j) const { return coeffs_.at(j); }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::int64_t level() const;

  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Element of the weight lattice: coefficients may be negative.
struct LatticeWeight {
  std::vector<std::int64_t> coeffs;

  std::string to_string() const;
  friend auto operator<=>(const LatticeWeight&, const LatticeWeight&) = default;
  friend bool operator==(const LatticeWeight&, const LatticeWeight&) = default;
};

}  // namespace fusionkit
