#include "fusionkit/orbit_rep.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fusionkit {

namespace {

void check_residues(int N, std::span<const int> values) {
  if (N < 2) throw std::invalid_argument("orbit modulus must be >= 2");
  for (int v : values)
    if (v < 0 || v >= N) throw std::invalid_argument("residue " + std::to_string(v) + " outside 0.." + std::to_string(N - 1));
}

std::string join(std::span<const int> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

Tuple::Tuple(int modulus, std::vector<int> values) : N(modulus), entries(std::move(values)) {
  check_residues(N, entries);
}

std::string Tuple::to_string() const { return join(entries); }

OrbitRep::OrbitRep(int modulus, std::vector<int> entries) : N_(modulus), entries_(std::move(entries)) {
  check_residues(N_, entries_);
  if (!std::is_sorted(entries_.begin(), entries_.end(), std::greater<>()))
    throw std::invalid_argument("OrbitRep: entries must be weakly decreasing");
}

OrbitRep OrbitRep::from_counts(std::span<const std::int64_t> counts) {
  const int N = static_cast<int>(counts.size());
  std::vector<int> entries;
  for (int j = N - 1; j >= 0; --j) {
    if (counts[j] < 0) throw std::invalid_argument("OrbitRep::from_counts: negative count");
    entries.insert(entries.end(), static_cast<std::size_t>(counts[j]), j);
  }
  return OrbitRep(N, std::move(entries));
}

std::vector<std::int64_t> OrbitRep::counts() const {
  std::vector<std::int64_t> a(static_cast<std::size_t>(N_), 0);
  for (int v : entries_) ++a[static_cast<std::size_t>(v)];
  return a;
}

std::string OrbitRep::to_string() const { return join(entries_); }

InfiniteOrbitRep::InfiniteOrbitRep(int modulus, std::vector<int> entries) : N_(modulus), entries_(std::move(entries)) {
  check_residues(N_, entries_);
  if (!std::is_sorted(entries_.begin(), entries_.end(), std::greater<>()))
    throw std::invalid_argument("InfiniteOrbitRep: entries must be weakly decreasing");
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

OrbitRep InfiniteOrbitRep::truncate(int length) const {
  if (length < static_cast<int>(entries_.size()))
    throw std::invalid_argument("InfiniteOrbitRep::truncate: length shorter than support");
  std::vector<int> e = entries_;
  e.resize(static_cast<std::size_t>(length), 0);
  return OrbitRep(N_, std::move(e));
}

InfiniteOrbitRep InfiniteOrbitRep::from_orbit(const OrbitRep& o) {
  return InfiniteOrbitRep(o.modulus(), std::vector<int>(o.entries().begin(), o.entries().end()));
}

std::string InfiniteOrbitRep::to_string() const { return join(entries_); }

}  // namespace fusionkit
