#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/orbit_rep.hpp"
#include "fusionkit/partition.hpp"

namespace fusionkit {

/// Orbit of the simple-current group Z_N acting by uniform shifts. Members sorted.
struct ScOrbit {
  std::vector<OrbitRep> members;

  bool contains(const OrbitRep& o) const;
  friend bool operator==(const ScOrbit&, const ScOrbit&) = default;
};

ScOrbit sc_orbit(const OrbitRep& a);

/// Lexicographically smallest member with a zero entry.
OrbitRep canonical_sc_representative(const ScOrbit& o);

/// [((N-1)^{a_{N-1}}, ..., 0^{a_0})] in O(N,k) to [(a_1+...+a_{N-1}, a_2+..., ..., a_{N-1}, 0)] in O(k,N).
/// Requires a_0 > 0.
OrbitRep rank_level_dual(const OrbitRep& a);

/// The algebra F(A_{N-1},k) modulo the simple currents, on SC-orbit classes.
struct QuotientTable {
  FusionContext ctx;
  /// Canonical representative of each class, ordered by first appearance in the basis.
  std::vector<OrbitRep> representatives;
  /// class_of[i] = class of the i-th full basis element.
  std::vector<std::size_t> class_of;
  StructureConstants constants;
  std::size_t full_dim = 0;

  std::size_t dim() const { return representatives.size(); }
  std::size_t class_index(const OrbitRep& o) const;
};

/// Sums full-table constants over each target class. Throws std::logic_error if
/// the sum depends on the chosen source representatives.
QuotientTable quotient_table(const FusionContext& ctx);
QuotientTable quotient_table(const FusionTable& full);

struct DualityReport {
  int N = 0;
  int k = 0;
  std::size_t dim = 0;
  std::size_t dual_dim = 0;
  std::size_t classes = 0;
  std::size_t dual_classes = 0;
  bool isomorphic = false;
  std::string witness;
};

/// Transports the quotient constants of (N,k) to those of (k,N) through
/// rank_level_dual and reports the first disagreement.
DualityReport verify_rank_level_duality(int N, int k);

}  // namespace fusionkit
