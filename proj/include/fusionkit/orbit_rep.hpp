#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fusionkit {

/// Element of Z_N^k.
struct Tuple {
  int N = 2;
  std::vector<int> entries;

  Tuple() = default;
  Tuple(int modulus, std::vector<int> values);

  std::size_t length() const { return entries.size(); }
  std::string to_string() const;

  friend auto operator<=>(const Tuple&, const Tuple&) = default;
  friend bool operator==(const Tuple&, const Tuple&) = default;
};

/// S_k-orbit of Z_N^k, held as its weakly decreasing representative
/// ((N-1)^{a_{N-1}}, ..., 1^{a_1}, 0^{a_0}).
class OrbitRep {
 public:
  OrbitRep() = default;
  /// `entries` must already be in standard form.
  OrbitRep(int modulus, std::vector<int> entries);
  OrbitRep(int modulus, std::initializer_list<int> entries) : OrbitRep(modulus, std::vector<int>(entries)) {}

  /// Builds the orbit with a_j copies of j, j = 0..N-1.
  static OrbitRep from_counts(std::span<const std::int64_t> counts);

  int modulus() const { return N_; }
  int k() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_.at(i); }
  /// a_0, ..., a_{N-1}.
  std::vector<std::int64_t> counts() const;
  bool has_zero() const { return !entries_.empty() && entries_.back() == 0; }

  std::string to_string() const;

  friend auto operator<=>(const OrbitRep&, const OrbitRep&) = default;
  friend bool operator==(const OrbitRep&, const OrbitRep&) = default;

 private:
  int N_ = 2;
  std::vector<int> entries_;
};

/// S_infinity-orbit of the finitely supported sequences over Z_N; stored as
/// its non-zero entries in weakly decreasing order.
class InfiniteOrbitRep {
 public:
  InfiniteOrbitRep() = default;
  InfiniteOrbitRep(int modulus, std::vector<int> entries);
  InfiniteOrbitRep(int modulus, std::initializer_list<int> entries)
      : InfiniteOrbitRep(modulus, std::vector<int>(entries)) {}

  int modulus() const { return N_; }
  std::size_t support() const { return entries_.size(); }
  std::span<const int> entries() const { return entries_; }

  /// The orbit of Z_N^length obtained by padding with zeros.
  OrbitRep truncate(int length) const;
  static InfiniteOrbitRep from_orbit(const OrbitRep& o);

  std::string to_string() const;

  friend auto operator<=>(const InfiniteOrbitRep&, const InfiniteOrbitRep&) = default;
  friend bool operator==(const InfiniteOrbitRep&, const InfiniteOrbitRep&) = default;

 private:
  int N_ = 2;
  std::vector<int> entries_;
};

}  // namespace fusionkit
