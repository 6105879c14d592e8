#include "fusionkit/orbit_algebra.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

#include "fusionkit/combinatorics.hpp"

namespace fusionkit {

namespace {

void require_same_space(const OrbitRep& a, const OrbitRep& b, const char* where) {
  if (a.modulus() != b.modulus() || a.k() != b.k())
    throw std::invalid_argument(std::string(where) + ": orbits " + a.to_string() + " and " + b.to_string() +
                                " live in different Z_N^k");
}

}  // namespace

OrbitRep standard_form(const Tuple& t) {
  std::vector<int> e = t.entries;
  std::sort(e.begin(), e.end(), std::greater<>());
  return OrbitRep(t.N, std::move(e));
}

std::vector<Tuple> orbit_elements(const OrbitRep& o) {
  if (o.k() > kEnumerationLimit)
    throw std::invalid_argument("orbit_elements: k=" + std::to_string(o.k()) + " exceeds the enumeration limit " +
                                std::to_string(kEnumerationLimit));
  std::vector<int> e(o.entries().begin(), o.entries().end());
  std::sort(e.begin(), e.end());
  std::vector<Tuple> out;
  do {
    out.emplace_back(o.modulus(), e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

// Equations z = a^ + y up to the stabilizer of a^ correspond to matrices
// n[j][v] = #{positions where a^ has value j and y has value v}: row sums are
// the multiplicities of a, column sums those of b.
OrbitExpansion raw_orbit_product(const OrbitRep& a, const OrbitRep& b) {
  require_same_space(a, b, "raw_orbit_product");
  const int N = a.modulus();
  const auto rows = a.counts();
  auto cols_left = b.counts();
  std::vector<std::int64_t> z(static_cast<std::size_t>(N), 0);
  OrbitExpansion out;

  std::function<void(int, int, std::int64_t)> fill = [&](int j, int v, std::int64_t row_left) {
    if (j == N) {
      out.add(OrbitRep::from_counts(z), 1);
      return;
    }
    if (v == N - 1) {
      // The last column takes whatever is left of this row.
      if (row_left > cols_left[static_cast<std::size_t>(v)]) return;
      const auto zi = static_cast<std::size_t>((j + v) % N);
      cols_left[static_cast<std::size_t>(v)] -= row_left;
      z[zi] += row_left;
      fill(j + 1, 0, j + 1 < N ? rows[static_cast<std::size_t>(j + 1)] : 0);
      z[zi] -= row_left;
      cols_left[static_cast<std::size_t>(v)] += row_left;
      return;
    }
    const auto zi = static_cast<std::size_t>((j + v) % N);
    const std::int64_t hi = std::min(row_left, cols_left[static_cast<std::size_t>(v)]);
    for (std::int64_t n = 0; n <= hi; ++n) {
      cols_left[static_cast<std::size_t>(v)] -= n;
      z[zi] += n;
      fill(j, v + 1, row_left - n);
      z[zi] -= n;
      cols_left[static_cast<std::size_t>(v)] += n;
    }
  };
  fill(0, 0, rows[0]);
  return out;
}

std::int64_t m_coefficient_bruteforce(const OrbitRep& a, const OrbitRep& b, const OrbitRep& c) {
  require_same_space(a, b, "m_coefficient_bruteforce");
  require_same_space(a, c, "m_coefficient_bruteforce");
  if (a.k() > kBruteForceLimit)
    throw std::invalid_argument("m_coefficient_bruteforce: k=" + std::to_string(a.k()) + " exceeds " +
                                std::to_string(kBruteForceLimit));
  const int N = a.modulus();
  std::set<std::vector<std::pair<int, int>>> orbits;
  const auto ys = orbit_elements(b);
  for (const auto& x : orbit_elements(a)) {
    for (const auto& y : ys) {
      std::vector<int> z(x.entries.size());
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = (x.entries[i] + y.entries[i]) % N;
      if (standard_form(Tuple(N, z)) != c) continue;
      // The diagonal S_k-orbit of (x, y, z) is determined by the multiset of column pairs.
      std::vector<std::pair<int, int>> key;
      for (std::size_t i = 0; i < z.size(); ++i) key.emplace_back(x.entries[i], y.entries[i]);
      std::sort(key.begin(), key.end());
      orbits.insert(std::move(key));
    }
  }
  return static_cast<std::int64_t>(orbits.size());
}

OrbitRep h_orbit(int m, const FusionContext& ctx) {
  if (m < 0 || m > ctx.k) throw std::invalid_argument("h_orbit: m must lie in 0..k");
  std::vector<int> e(static_cast<std::size_t>(ctx.k), 0);
  std::fill_n(e.begin(), m, 1);
  return OrbitRep(ctx.N, std::move(e));
}

OrbitExpansion special_orbit_product(const OrbitRep& a, int m) {
  if (m < 0 || m > a.k())
    throw std::invalid_argument("special_orbit_product: m=" + std::to_string(m) + " outside 0..k");
  const int N = a.modulus();
  const auto counts = a.counts();
  std::vector<std::int64_t> moved(static_cast<std::size_t>(N), 0);
  OrbitExpansion out;
  std::function<void(int, std::int64_t)> rec = [&](int j, std::int64_t left) {
    if (j == N) {
      if (left != 0) return;
      std::vector<std::int64_t> c(static_cast<std::size_t>(N));
      for (int i = 0; i < N; ++i)
        c[static_cast<std::size_t>(i)] = counts[static_cast<std::size_t>(i)] - moved[static_cast<std::size_t>(i)] +
                                         moved[static_cast<std::size_t>((i + N - 1) % N)];
      out.add(OrbitRep::from_counts(c), 1);
      return;
    }
    const std::int64_t hi = std::min(left, counts[static_cast<std::size_t>(j)]);
    for (std::int64_t x = 0; x <= hi; ++x) {
      moved[static_cast<std::size_t>(j)] = x;
      rec(j + 1, left - x);
    }
    moved[static_cast<std::size_t>(j)] = 0;
  };
  rec(0, m);
  return out;
}

OrbitRep simple_current_shift(const OrbitRep& a, int t) {
  const int N = a.modulus();
  if (t < 0 || t >= N) throw std::invalid_argument("simple_current_shift: t must lie in 0..N-1");
  std::vector<int> e(a.entries().begin(), a.entries().end());
  for (int& v : e) v = (v + t) % N;
  return standard_form(Tuple(N, std::move(e)));
}

bool is_pieri_orbit(const OrbitRep& b) {
  const int N = b.modulus();
  const auto counts = b.counts();
  for (int t = 0; t < N; ++t) {
    bool ok = true;
    for (int j = 0; j < N && ok; ++j)
      if (j != t && j != (t + 1) % N && counts[static_cast<std::size_t>(j)] != 0) ok = false;
    if (ok) return true;
  }
  return false;
}

OrbitExpansion fixed_product(const OrbitRep& a, const OrbitRep& b) {
  require_same_space(a, b, "fixed_product");
  if (is_pieri_orbit(b)) return raw_orbit_product(a, b);

  const int N = a.modulus();
  const int k = a.k();
  const Partition mu = orbit_to_partition(b);
  const int n = N - 1;

  std::map<std::pair<OrbitRep, int>, OrbitExpansion> cache;
  auto times_h = [&](const OrbitExpansion& x, int m) {
    OrbitExpansion out;
    if (m == 0) return x;
    for (const auto& [orbit, c] : x) {
      auto [it, inserted] = cache.try_emplace({orbit, m});
      if (inserted) it->second = special_orbit_product(orbit, m);
      out.add_scaled(it->second, c);
    }
    return out;
  };

  // Row i of the Jacobi-Trudi matrix is assigned a column in turn; the state
  // is keyed by the set of columns used so far.
  std::vector<OrbitExpansion> state(std::size_t{1} << n);
  state[0] = OrbitExpansion::single(a);
  for (unsigned mask = 0; mask < state.size(); ++mask) {
    if (state[mask].empty()) continue;
    const int row = std::popcount(mask);
    if (row == n) continue;
    for (int col = 0; col < n; ++col) {
      if (mask & (1u << col)) continue;
      const std::int64_t m = mu[static_cast<std::size_t>(row)] - row + col;
      if (m < 0 || m > k) continue;
      const int inversions = std::popcount(mask >> (col + 1));
      state[mask | (1u << col)].add_scaled(times_h(state[mask], static_cast<int>(m)), inversions % 2 ? -1 : 1);
    }
  }
  return state.back();
}

InfiniteOrbitExpansion tensor_orbit_product(const InfiniteOrbitRep& a, const InfiniteOrbitRep& b, int length) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("tensor_orbit_product: moduli differ");
  const auto needed = static_cast<int>(a.support() + b.support());
  if (length < std::max(needed, 1))
    throw std::invalid_argument("tensor_orbit_product: embedding length " + std::to_string(length) +
                                " below combined support " + std::to_string(needed));
  InfiniteOrbitExpansion out;
  for (const auto& [orbit, c] : raw_orbit_product(a.truncate(length), b.truncate(length)))
    out.add(InfiniteOrbitRep::from_orbit(orbit), c);
  return out;
}

InfiniteOrbitExpansion tensor_orbit_product(const InfiniteOrbitRep& a, const InfiniteOrbitRep& b) {
  return tensor_orbit_product(a, b, std::max(static_cast<int>(a.support() + b.support()), 1));
}

std::vector<OrbitRep> all_orbits(const FusionContext& ctx) {
  std::vector<OrbitRep> out;
  for (const auto& w : level_weights(ctx)) out.push_back(weight_to_orbit(w, ctx));
  return out;
}

}  // namespace fusionkit
