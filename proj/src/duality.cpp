#include "fusionkit/duality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fusionkit/checked.hpp"
#include "fusionkit/combinatorics.hpp"
#include "fusionkit/orbit_algebra.hpp"

namespace fusionkit {

bool ScOrbit::contains(const OrbitRep& o) const { return std::binary_search(members.begin(), members.end(), o); }

ScOrbit sc_orbit(const OrbitRep& a) {
  ScOrbit out;
  for (int t = 0; t < a.modulus(); ++t) out.members.push_back(simple_current_shift(a, t));
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

OrbitRep canonical_sc_representative(const ScOrbit& o) {
  for (const auto& m : o.members)
    if (m.has_zero()) return m;
  throw std::invalid_argument("canonical_sc_representative: no member has a zero entry");
}

OrbitRep rank_level_dual(const OrbitRep& a) {
  const auto counts = a.counts();
  if (counts[0] == 0) throw std::invalid_argument("rank_level_dual: " + a.to_string() + " has no zero entry");
  const int N = a.modulus();
  std::vector<int> entries(static_cast<std::size_t>(N), 0);
  std::int64_t tail = 0;
  for (int i = N - 1; i >= 1; --i) {
    tail += counts[static_cast<std::size_t>(i)];
    entries[static_cast<std::size_t>(i - 1)] = static_cast<int>(tail);
  }
  return OrbitRep(a.k(), std::move(entries));
}

std::size_t QuotientTable::class_index(const OrbitRep& o) const {
  const OrbitRep rep = canonical_sc_representative(sc_orbit(o));
  for (std::size_t i = 0; i < representatives.size(); ++i)
    if (representatives[i] == rep) return i;
  throw std::out_of_range("QuotientTable: " + o.to_string() + " is not an orbit of this context");
}

QuotientTable quotient_table(const FusionContext& ctx) { return quotient_table(full_table(ctx)); }

QuotientTable quotient_table(const FusionTable& full) {
  QuotientTable q;
  q.ctx = full.ctx;
  q.full_dim = full.dim();
  const std::size_t n = full.dim();

  std::map<OrbitRep, std::size_t> seen;
  q.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const OrbitRep rep = canonical_sc_representative(sc_orbit(partition_to_orbit(full.basis[i], full.ctx)));
    auto [it, inserted] = seen.try_emplace(rep, q.representatives.size());
    if (inserted) q.representatives.push_back(rep);
    q.class_of[i] = it->second;
  }

  const std::size_t d = q.dim();
  std::vector<std::size_t> source(d);
  for (std::size_t i = 0; i < d; ++i)
    source[i] = full.index_of(orbit_to_partition(q.representatives[i]));

  q.constants = StructureConstants(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        auto& slot = q.constants.at(a, b, q.class_of[c]);
        slot = checked_add(slot, full.constants.at(source[a], source[b], c));
      }

  // Every pair of representatives must give the same class sums.
  std::vector<std::int64_t> sums(d);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::fill(sums.begin(), sums.end(), 0);
      for (std::size_t c = 0; c < n; ++c) sums[q.class_of[c]] += full.constants.at(x, y, c);
      for (std::size_t C = 0; C < d; ++C)
        if (sums[C] != q.constants.at(q.class_of[x], q.class_of[y], C))
          throw std::logic_error("quotient_table: class product depends on representatives at " +
                                 full.basis[x].to_string() + " * " + full.basis[y].to_string());
    }
  return q;
}

DualityReport verify_rank_level_duality(int N, int k) {
  if (N < 2 || k < 2) throw std::invalid_argument("verify_rank_level_duality: N and k must both be >= 2");
  DualityReport report;
  report.N = N;
  report.k = k;
  const FusionTable left_full = full_table(FusionContext(N, k));
  const FusionTable right_full = full_table(FusionContext(k, N));
  const QuotientTable left = quotient_table(left_full);
  const QuotientTable right = quotient_table(right_full);
  report.dim = left_full.dim();
  report.dual_dim = right_full.dim();
  report.classes = left.dim();
  report.dual_classes = right.dim();

  if (left.dim() != right.dim()) {
    report.witness = "class counts differ: " + std::to_string(left.dim()) + " vs " + std::to_string(right.dim());
    return report;
  }
  const std::size_t d = left.dim();
  std::vector<std::size_t> image(d);
  std::vector<bool> hit(d, false);
  for (std::size_t i = 0; i < d; ++i) {
    image[i] = right.class_index(rank_level_dual(left.representatives[i]));
    if (hit[image[i]]) {
      report.witness = "two classes map to " + right.representatives[image[i]].to_string();
      return report;
    }
    hit[image[i]] = true;
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const auto lhs = left.constants.at(a, b, c);
        const auto rhs = right.constants.at(image[a], image[b], image[c]);
        if (lhs != rhs) {
          report.witness = left.representatives[a].to_string() + " * " + left.representatives[b].to_string() +
                           " -> " + left.representatives[c].to_string() + ": " + std::to_string(lhs) + " vs " +
                           std::to_string(rhs);
          return report;
        }
      }
  report.isomorphic = true;
  return report;
}

}  // namespace fusionkit
