#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fusionkit/linear_combination.hpp"
#include "fusionkit/orbit_rep.hpp"
#include "fusionkit/partition.hpp"

namespace fusionkit {

using OrbitExpansion = LinearCombination<OrbitRep>;
using InfiniteOrbitExpansion = LinearCombination<InfiniteOrbitRep>;

/// Largest k for which the permutation-enumerating paths run.
inline constexpr int kEnumerationLimit = 12;
inline constexpr int kBruteForceLimit = 8;

OrbitRep standard_form(const Tuple& t);

/// All distinct rearrangements of o, sorted. Refuses k > kEnumerationLimit.
std::vector<Tuple> orbit_elements(const OrbitRep& o);

/// Raw orbit product [a] x [b]: the number of S_k-orbits of solutions of
/// x + y = z, grouped by [z]. Not associative in general.
OrbitExpansion raw_orbit_product(const OrbitRep& a, const OrbitRep& b);

/// M^{[c]}_{[a],[b]} by enumerating [a] x [b] and counting diagonal orbits.
std::int64_t m_coefficient_bruteforce(const OrbitRep& a, const OrbitRep& b, const OrbitRep& c);

/// The orbit (1^m, 0^{k-m}) of Z_N^k.
OrbitRep h_orbit(int m, const FusionContext& ctx);

/// [a] x [(1^m, 0^{k-m})], constructed directly: one term per admissible
/// redistribution (m_0, ..., m_{N-1}) with 0 <= m_j <= a_j.
OrbitExpansion special_orbit_product(const OrbitRep& a, int m);

/// [a] x [(t^k)] = [a + t].
OrbitRep simple_current_shift(const OrbitRep& a, int t);

/// True iff b = [((t+1)^m, t^{k-m})] for some t and m (indices mod N), i.e.
/// its entries take at most two cyclically adjacent values.
bool is_pieri_orbit(const OrbitRep& b);

/// Associative orbit product: raw product when b is a Pieri orbit, otherwise
/// the Jacobi-Trudi expansion of b as iterated products by [h_m].
OrbitExpansion fixed_product(const OrbitRep& a, const OrbitRep& b);

/// Raw product of S_infinity-orbits, computed in Z_N^K with K the combined support.
InfiniteOrbitExpansion tensor_orbit_product(const InfiniteOrbitRep& a, const InfiniteOrbitRep& b);
/// Same, embedded in Z_N^length; length must be at least the combined support.
InfiniteOrbitExpansion tensor_orbit_product(const InfiniteOrbitRep& a, const InfiniteOrbitRep& b, int length);

/// Every orbit of Z_N^k (equivalently every level-k weight), in basis order.
std::vector<OrbitRep> all_orbits(const FusionContext& ctx);

}  // namespace fusionkit
