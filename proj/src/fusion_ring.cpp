#include "fusionkit/fusion_ring.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fusionkit/checked.hpp"
#include "fusionkit/combinatorics.hpp"
#include "fusionkit/orbit_algebra.hpp"

namespace fusionkit {

namespace {

void require_in_box(const Partition& p, const FusionContext& ctx, const char* where) {
  if (!p.fits_in(ctx.N - 1, ctx.k))
    throw std::invalid_argument(std::string(where) + ": " + p.to_string() + " is not inside the " +
                                std::to_string(ctx.N - 1) + " x " + std::to_string(ctx.k) + " box");
}

// S_p * det(h_{q_i - i + j}), the determinant expanded row by row. The state
// after i rows is keyed by the set of columns already used; `times_h` gives
// S_x * h_m for a single basis element (and may return an empty sum).
Expansion jacobi_trudi_product(const Partition& p, const Partition& q,
                               const std::function<Expansion(const Partition&, std::int64_t)>& times_h) {
  const std::size_t n = q.length();
  if (n == 0) return Expansion::single(p);
  if (n > 30) throw std::invalid_argument("jacobi_trudi_product: determinant too large");

  std::map<std::pair<Partition, std::int64_t>, Expansion> cache;
  auto step = [&](const Expansion& x, std::int64_t m) {
    if (m == 0) return x;
    Expansion out;
    for (const auto& [label, c] : x) {
      auto [it, inserted] = cache.try_emplace({label, m});
      if (inserted) it->second = times_h(label, m);
      out.add_scaled(it->second, c);
    }
    return out;
  };

  std::vector<Expansion> state(std::size_t{1} << n);
  state[0] = Expansion::single(p);
  for (std::size_t mask = 0; mask < state.size(); ++mask) {
    if (state[mask].empty()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      const std::int64_t m = q[row] - static_cast<std::int64_t>(row) + static_cast<std::int64_t>(col);
      if (m < 0) continue;
      const Expansion term = step(state[mask], m);
      if (term.empty()) continue;
      const int inversions = std::popcount(mask >> (col + 1));
      state[mask | (std::size_t{1} << col)].add_scaled(term, inversions % 2 ? -1 : 1);
    }
  }
  return state.back();
}

void require_non_negative(const Expansion& e, const Partition& p, const Partition& q) {
  for (const auto& [label, c] : e)
    if (c < 0) {
      throw std::logic_error("negative multiplicity " + std::to_string(c) + " for " + label.to_string() + " in " +
                             p.to_string() + " * " + q.to_string());
    }
}

}  // namespace

std::vector<Partition> basis(const FusionContext& ctx) { return partitions_in_box(ctx.N - 1, ctx.k); }

Expansion pieri_h(const Partition& p, int m, const FusionContext& ctx) {
  require_in_box(p, ctx, "pieri_h");
  if (m < 0 || m > ctx.k) throw std::invalid_argument("pieri_h: m=" + std::to_string(m) + " outside 0..k");
  Expansion out;
  for_each_row_strip(p, m, ctx.k, static_cast<std::size_t>(ctx.N),
                     [&](const Partition& nu) { out.add(reduce_full_columns(nu, ctx.N), 1); });
  return out;
}

Expansion pieri_e(const Partition& p, int m, const FusionContext& ctx) {
  require_in_box(p, ctx, "pieri_e");
  if (m < 0 || m > ctx.N) throw std::invalid_argument("pieri_e: m=" + std::to_string(m) + " outside 0..N");
  const auto rows = static_cast<std::size_t>(ctx.N);
  Expansion out;
  for (unsigned mask = 0; mask < (1u << rows); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::vector<std::int64_t> nu(rows);
    bool ok = true;
    for (std::size_t i = 0; i < rows && ok; ++i) {
      nu[i] = p[i] + ((mask >> i) & 1u);
      if (i > 0 && nu[i] > nu[i - 1]) ok = false;
    }
    if (!ok || nu[0] - nu[rows - 1] > ctx.k) continue;
    out.add(reduce_full_columns(Partition(nu), ctx.N), 1);
  }
  return out;
}

Expansion multiply(const Partition& p, const Partition& q, const FusionContext& ctx) {
  require_in_box(p, ctx, "multiply");
  require_in_box(q, ctx, "multiply");
  // Expand whichever factor has the smaller determinant.
  const bool swap = p.length() < q.length();
  const Partition& kept = swap ? q : p;
  const Partition& expanded = swap ? p : q;
  Expansion out = jacobi_trudi_product(kept, expanded, [&](const Partition& x, std::int64_t m) {
    // h_m vanishes in the quotient for k < m <= k + N - 1, which covers every
    // index a determinant of a partition in the box can produce.
    if (m > ctx.k) return Expansion{};
    return pieri_h(x, static_cast<int>(m), ctx);
  });
  require_non_negative(out, p, q);
  return out;
}

Expansion multiply_by_h_sequence(const Partition& p, const std::vector<std::int64_t>& eps, const FusionContext& ctx) {
  require_in_box(p, ctx, "multiply_by_h_sequence");
  std::int64_t total = 0;
  for (auto e : eps) {
    if (e < 0 || e > ctx.k) throw std::invalid_argument("multiply_by_h_sequence: entry " + std::to_string(e) + " outside 0..k");
    total = checked_add(total, e);
  }
  const Content content(eps);
  const auto rows = static_cast<std::size_t>(ctx.N);
  const std::int64_t target = checked_add(p.boxes(), total);

  Expansion out;
  std::vector<std::int64_t> nu(rows, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == rows) {
      if (left != 0 || nu[0] - nu[rows - 1] > ctx.k) return;
      const Partition outer(nu);
      const std::int64_t K = count_cylindric_tableaux(SkewShape(outer, p), content, ctx);
      out.add(reduce_full_columns(outer, ctx.N), K);
      return;
    }
    const std::int64_t hi = i == 0 ? p[0] + left : std::min(nu[i - 1], p[i] + left);
    for (std::int64_t v = p[i]; v <= hi; ++v) {
      nu[i] = v;
      rec(i + 1, left - (v - p[i]));
    }
    nu[i] = 0;
  };
  rec(0, target - p.boxes());
  return out;
}

Partition simple_current_power(const Partition& p, int t, const FusionContext& ctx) {
  if (t < 0) throw std::invalid_argument("simple_current_power: t must be >= 0");
  Partition cur = p;
  for (int i = 0; i < t; ++i) {
    const Expansion e = pieri_h(cur, ctx.k, ctx);
    if (e.size() != 1 || e.begin()->second != 1)
      throw std::logic_error("simple_current_power: h_k did not act as a simple current on " + cur.to_string());
    cur = e.begin()->first;
  }
  return cur;
}

Expansion tensor_pieri_h(const Partition& p, std::int64_t m, int N) {
  if (N < 2) throw std::invalid_argument("tensor_pieri_h: N must be >= 2");
  if (p.length() > static_cast<std::size_t>(N)) throw std::invalid_argument("tensor_pieri_h: partition longer than N");
  if (m < 0) return {};
  Expansion out;
  for_each_row_strip(p, m, checked_add(p[0], m), static_cast<std::size_t>(N),
                     [&](const Partition& nu) { out.add(reduce_full_columns(nu, N), 1); });
  return out;
}

Expansion tensor_multiply(const Partition& p, const Partition& q, int N) {
  if (p.length() >= static_cast<std::size_t>(N) || q.length() >= static_cast<std::size_t>(N))
    throw std::invalid_argument("tensor_multiply: partitions must have at most N-1 rows");
  const bool swap = p.length() < q.length();
  Expansion out = jacobi_trudi_product(swap ? q : p, swap ? p : q,
                                       [&](const Partition& x, std::int64_t m) { return tensor_pieri_h(x, m, N); });
  require_non_negative(out, p, q);
  return out;
}

std::size_t FusionTable::index_of(const Partition& p) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), p, GradedLex{});
  if (it == basis.end() || *it != p) throw std::out_of_range("FusionTable: " + p.to_string() + " is not a basis label");
  return static_cast<std::size_t>(it - basis.begin());
}

namespace {

FusionTable empty_table(const FusionContext& ctx, std::size_t cap) {
  FusionTable t{ctx, basis(ctx), {}};
  if (t.basis.size() > cap)
    throw std::invalid_argument("full_table: basis size " + std::to_string(t.basis.size()) + " exceeds cap " +
                                std::to_string(cap));
  t.constants = StructureConstants(t.basis.size());
  return t;
}

void fill_pair(FusionTable& t, std::size_t a, std::size_t b) {
  for (const auto& [label, c] : multiply(t.basis[a], t.basis[b], t.ctx)) t.constants.at(a, b, t.index_of(label)) = c;
}

}  // namespace

FusionTable full_table_serial(const FusionContext& ctx, std::size_t cap) {
  FusionTable t = empty_table(ctx, cap);
  const std::size_t n = t.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) fill_pair(t, a, b);
  return t;
}

FusionTable full_table(const FusionContext& ctx, std::size_t cap) {
  FusionTable t = empty_table(ctx, cap);
  const auto n = static_cast<std::int64_t>(t.dim());
  std::exception_ptr failure;
  // Each pair writes only its own (a, b, *) slice.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t pair = 0; pair < n * n; ++pair) {
    try {
      fill_pair(t, static_cast<std::size_t>(pair / n), static_cast<std::size_t>(pair % n));
    } catch (...) {
#pragma omp critical(fusionkit_table_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return t;
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck& AxiomReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("AxiomReport: no check named " + name);
}

AxiomReport verify_fusion_axioms(const StructureConstants& t) {
  const std::size_t n = t.dim();
  AxiomReport report;
  auto record = [&](std::string name, std::string witness) {
    report.checks.push_back({std::move(name), witness.empty(), std::move(witness)});
  };
  auto triple = [](std::size_t a, std::size_t b, std::size_t c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
  };

  std::string witness;
  for (std::size_t a = 0; a < n && witness.empty(); ++a)
    for (std::size_t b = 0; b < n && witness.empty(); ++b)
      for (std::size_t c = 0; c < n && witness.empty(); ++c)
        if (t.at(a, b, c) < 0) witness = "N" + triple(a, b, c) + " < 0";
  record("non_negative", witness);

  witness.clear();
  for (std::size_t a = 0; a < n && witness.empty(); ++a)
    for (std::size_t b = a + 1; b < n && witness.empty(); ++b)
      for (std::size_t c = 0; c < n && witness.empty(); ++c)
        if (t.at(a, b, c) != t.at(b, a, c)) witness = "N^c_{a,b} != N^c_{b,a} at " + triple(a, b, c);
  record("commutative", witness);

  witness.clear();
  for (std::size_t a = 0; a < n && witness.empty(); ++a)
    for (std::size_t b = 0; b < n && witness.empty(); ++b)
      for (std::size_t c = 0; c < n && witness.empty(); ++c)
        for (std::size_t e = 0; e < n && witness.empty(); ++e) {
          std::int64_t left = 0, right = 0;
          for (std::size_t d = 0; d < n; ++d) {
            left = checked_add(left, checked_mul(t.at(a, b, d), t.at(d, c, e)));
            right = checked_add(right, checked_mul(t.at(b, c, d), t.at(a, d, e)));
          }
          if (left != right) witness = "(ab)c != a(bc) at (a,b,c,e)=" + triple(a, b, c) + "," + std::to_string(e);
        }
  record("associative", witness);

  for (std::size_t w = 0; w < n && !report.identity; ++w) {
    bool unit = true;
    for (std::size_t b = 0; b < n && unit; ++b)
      for (std::size_t c = 0; c < n && unit; ++c)
        if (t.at(w, b, c) != (b == c ? 1 : 0) || t.at(b, w, c) != (b == c ? 1 : 0)) unit = false;
    if (unit) report.identity = w;
  }
  record("identity", report.identity ? "" : "no basis element acts as the identity");

  if (!report.identity) {
    record("conjugation_involution", "no identity");
    record("conjugation_invariance", "no identity");
    record("total_symmetry", "no identity");
    return report;
  }
  const std::size_t w = *report.identity;

  witness.clear();
  report.conjugation.assign(n, n);
  for (std::size_t a = 0; a < n && witness.empty(); ++a) {
    std::size_t ones = 0;
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = t.at(a, b, w);
      if (v == 1) {
        ++ones;
        report.conjugation[a] = b;
      } else if (v != 0) {
        witness = "C[" + std::to_string(a) + "][" + std::to_string(b) + "] = " + std::to_string(v);
      }
    }
    if (witness.empty() && ones != 1) witness = "row " + std::to_string(a) + " of C has " + std::to_string(ones) + " ones";
  }
  for (std::size_t a = 0; a < n && witness.empty(); ++a)
    if (report.conjugation[report.conjugation[a]] != a) witness = "C^2 != I at " + std::to_string(a);
  record("conjugation_involution", witness);
  if (!witness.empty()) {
    record("conjugation_invariance", "no conjugation");
    record("total_symmetry", "no conjugation");
    return report;
  }
  const auto& s = report.conjugation;

  witness.clear();
  for (std::size_t a = 0; a < n && witness.empty(); ++a)
    for (std::size_t b = 0; b < n && witness.empty(); ++b)
      for (std::size_t c = 0; c < n && witness.empty(); ++c)
        if (t.at(a, b, c) != t.at(s[a], s[b], s[c])) witness = "N^c_{a,b} != N^{s(c)}_{s(a),s(b)} at " + triple(a, b, c);
  record("conjugation_invariance", witness);

  witness.clear();
  auto lowered = [&](std::size_t a, std::size_t b, std::size_t c) { return t.at(a, b, s[c]); };
  for (std::size_t a = 0; a < n && witness.empty(); ++a)
    for (std::size_t b = 0; b < n && witness.empty(); ++b)
      for (std::size_t c = 0; c < n && witness.empty(); ++c) {
        const auto v = lowered(a, b, c);
        if (v != lowered(b, a, c) || v != lowered(a, c, b) || v != lowered(c, b, a))
          witness = "N_{a,b,c} not symmetric at " + triple(a, b, c);
      }
  record("total_symmetry", witness);
  return report;
}

int gepner_witten_a1(int a, int b, int c, int k) {
  if (k < 1) throw std::invalid_argument("gepner_witten_a1: k must be >= 1");
  for (int x : {a, b})
    if (x < 0 || x > k) throw std::invalid_argument("gepner_witten_a1: label " + std::to_string(x) + " outside 0..k");
  // Targets above k are allowed: the bounds below already force c <= k.
  if (c < 0) throw std::invalid_argument("gepner_witten_a1: negative target label");
  const bool parity = (a + b + c) % 2 == 0;
  const bool range = std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b);
  return parity && range ? 1 : 0;
}

RelationReport fw_a2_relation_check(const FusionContext& ctx) {
  if (ctx.N != 3) throw std::invalid_argument("fw_a2_relation_check: requires N = 3");
  const auto weights = level_weights(ctx);
  RelationReport report;
  for (const auto& mu : weights)
    for (const auto& lambda : weights) {
      const Expansion fusion = multiply(weight_to_partition(mu), weight_to_partition(lambda), ctx);
      const OrbitExpansion raw = raw_orbit_product(weight_to_orbit(mu, ctx), weight_to_orbit(lambda, ctx));
      for (const auto& nu : weights) {
        ++report.triples_checked;
        const std::int64_t f = fusion.coefficient(weight_to_partition(nu));
        const std::int64_t r = raw.coefficient(weight_to_orbit(nu, ctx));
        if (r != f * (f + 1) / 2) report.violations.push_back({mu, lambda, nu, r, f});
      }
    }
  return report;
}

}  // namespace fusionkit
