#include "fusionkit/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

#include "fusionkit/checked.hpp"

namespace fusionkit {

namespace {

using Row = std::vector<std::int64_t>;

// Visits every nu with lam <= nu <= cap rowwise, nu_i <= lam_{i-1}, and
// sum(nu - lam) == m. `lam` is padded to cap.size() rows.
void strips_under_cap(const Row& lam, std::int64_t m, const Row& cap, const std::function<void(const Row&)>& visit) {
  const std::size_t rows = cap.size();
  Row nu = lam;
  nu.resize(rows, 0);
  Row base = nu;
  // Largest number of boxes rows i.. can still take.
  Row room(rows + 1, 0);
  for (std::size_t i = rows; i-- > 0;) {
    std::int64_t hi = cap[i];
    if (i > 0) hi = std::min(hi, base[i - 1]);
    room[i] = room[i + 1] + std::max<std::int64_t>(0, hi - base[i]);
  }
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == rows) {
      if (left == 0) visit(nu);
      return;
    }
    if (left > room[i]) return;
    std::int64_t hi = cap[i];
    if (i > 0) hi = std::min(hi, base[i - 1]);
    const std::int64_t max_add = std::min(left, hi - base[i]);
    for (std::int64_t add = 0; add <= max_add; ++add) {
      nu[i] = base[i] + add;
      rec(i + 1, left - add);
    }
    nu[i] = base[i];
  };
  rec(0, m);
}

Row padded(const Partition& p, std::size_t rows) {
  Row r(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) r[i] = p[i];
  return r;
}

}  // namespace

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<std::int64_t> out(static_cast<std::size_t>(p[0]), 0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    std::int64_t count = 0;
    while (static_cast<std::size_t>(count) < p.length() && p[static_cast<std::size_t>(count)] > static_cast<std::int64_t>(j))
      ++count;
    out[j] = count;
  }
  return Partition(std::move(out));
}

bool is_row_strip(const SkewShape& s, std::int64_t m) {
  if (s.boxes() != m) return false;
  for (std::size_t i = 0; i + 1 < s.outer.length(); ++i)
    if (s.outer[i + 1] > s.inner[i]) return false;
  return true;
}

bool is_column_strip(const SkewShape& s, std::int64_t m) {
  if (s.boxes() != m) return false;
  for (std::size_t i = 0; i < s.outer.length(); ++i)
    if (s.outer[i] - s.inner[i] > 1) return false;
  return true;
}

bool is_cylindric_row_strip(const SkewShape& s, std::int64_t m, const FusionContext& ctx) {
  if (s.outer.length() > static_cast<std::size_t>(ctx.N))
    throw std::invalid_argument("is_cylindric_row_strip: outer partition has more than N rows");
  return is_row_strip(s, m) && s.outer[0] - s.inner[static_cast<std::size_t>(ctx.N - 1)] <= ctx.k;
}

bool equivalent(const Partition& p, const Partition& q, int N) {
  if (p.length() > static_cast<std::size_t>(N) || q.length() > static_cast<std::size_t>(N))
    throw std::invalid_argument("equivalent: partition longer than N");
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(N); ++i)
    if (p[i] - p[i + 1] != q[i] - q[i + 1]) return false;
  return true;
}

Partition reduce_full_columns(const Partition& p, int N) {
  if (p.length() > static_cast<std::size_t>(N)) throw std::invalid_argument("reduce_full_columns: partition longer than N");
  const std::int64_t full = p[static_cast<std::size_t>(N - 1)];
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(N); ++i) out.push_back(p[i] - full);
  return Partition(std::move(out));
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  Row cur(static_cast<std::size_t>(std::max(rows, 0)), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t bound) {
    if (i == cur.size()) {
      out.emplace_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= bound; ++v) {
      cur[i] = v;
      rec(i + 1, v);
    }
    cur[i] = 0;
  };
  rec(0, cols);
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

void for_each_row_strip(const Partition& lambda, std::int64_t m, std::int64_t max_first_row, std::size_t max_rows,
                        const std::function<void(const Partition&)>& visit) {
  if (m < 0 || max_rows == 0) return;
  const std::size_t rows = std::min(max_rows, lambda.length() + 1);
  if (lambda.length() > rows) return;
  Row cap(rows, max_first_row);
  strips_under_cap(padded(lambda, rows), m, cap, [&](const Row& nu) { visit(Partition(nu)); });
}

int Tableau::entry(std::size_t r, std::int64_t c) const {
  if (r == 0 || r > rows.size()) return 0;
  const std::int64_t start = shape.inner[r - 1];
  if (c <= start || c > shape.outer[r - 1]) return 0;
  return rows[r - 1][static_cast<std::size_t>(c - start - 1)];
}

Content Tableau::content() const {
  std::vector<std::int64_t> counts;
  for (const auto& row : rows)
    for (int v : row) {
      if (static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  return Content(std::move(counts));
}

std::vector<Tableau> enumerate_tableaux(const SkewShape& s, const Content& content) {
  if (s.boxes() != content.total())
    throw std::invalid_argument("enumerate_tableaux: shape has " + std::to_string(s.boxes()) +
                                " boxes but content sums to " + std::to_string(content.total()));
  const std::size_t rows = s.outer.length();
  const Row cap = padded(s.outer, rows);
  std::vector<Row> chain{padded(s.inner, rows)};
  std::vector<Tableau> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == content.size()) {
      if (chain.back() != cap) return;
      Tableau t{s, std::vector<std::vector<int>>(rows)};
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t step = 1; step < chain.size(); ++step)
          t.rows[r].insert(t.rows[r].end(), static_cast<std::size_t>(chain[step][r] - chain[step - 1][r]),
                           static_cast<int>(step));
      out.push_back(std::move(t));
      return;
    }
    strips_under_cap(chain.back(), content[i], cap, [&](const Row& nu) {
      chain.push_back(nu);
      rec(i + 1);
      chain.pop_back();
    });
  };
  rec(0);
  return out;
}

bool is_cylindric(const Tableau& t, const FusionContext& ctx) {
  const auto& outer = t.shape.outer;
  const auto& inner = t.shape.inner;
  if (outer.length() > static_cast<std::size_t>(ctx.N))
    throw std::invalid_argument("is_cylindric: shape has more than N rows");
  const auto top = static_cast<std::size_t>(ctx.N);
  for (std::int64_t p = inner[top - 1] + 1; p <= outer[top - 1]; ++p) {
    const std::int64_t c = ctx.k + p;
    if (c <= inner[0] || c > outer[0]) continue;
    if (t.entry(top, p) >= t.entry(1, c)) return false;
  }
  return true;
}

std::int64_t count_cylindric_tableaux(const SkewShape& s, const Content& content, const FusionContext& ctx) {
  if (s.outer.length() > static_cast<std::size_t>(ctx.N))
    throw std::invalid_argument("count_cylindric_tableaux: outer partition has more than N rows");
  std::int64_t count = 0;
  for (const auto& t : enumerate_tableaux(s, content))
    if (is_cylindric(t, ctx)) count = checked_add(count, 1);
  return count;
}

Partition weight_to_partition(const Weight& w) {
  const auto a = w.coeffs();
  std::vector<std::int64_t> parts(a.size(), 0);
  std::int64_t run = 0;
  for (std::size_t j = a.size(); j-- > 0;) {
    run = checked_add(run, a[j]);
    parts[j] = run;
  }
  return Partition(std::move(parts));
}

Weight partition_to_weight(const Partition& p, int N) {
  if (p.length() > static_cast<std::size_t>(N)) throw std::invalid_argument("partition_to_weight: partition longer than N");
  std::vector<std::int64_t> a(static_cast<std::size_t>(N - 1));
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = p[j] - p[j + 1];
  return Weight(std::move(a));
}

std::vector<Weight> level_weights(const FusionContext& ctx) {
  std::vector<Weight> out;
  for (const auto& p : partitions_in_box(ctx.N - 1, ctx.k)) out.push_back(partition_to_weight(p, ctx.N));
  return out;
}

OrbitRep weight_to_orbit(const Weight& w, const FusionContext& ctx) {
  if (w.rank() != ctx.N) throw std::invalid_argument("weight_to_orbit: weight " + w.to_string() + " is not of rank N");
  const std::int64_t level = w.level();
  if (level > ctx.k)
    throw std::invalid_argument("weight_to_orbit: level " + std::to_string(level) + " exceeds k=" + std::to_string(ctx.k));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(ctx.N));
  counts[0] = ctx.k - level;
  for (std::size_t j = 1; j < counts.size(); ++j) counts[j] = w[j - 1];
  return OrbitRep::from_counts(counts);
}

Weight orbit_to_weight(const OrbitRep& o) {
  auto counts = o.counts();
  return Weight(std::vector<std::int64_t>(counts.begin() + 1, counts.end()));
}

Partition orbit_to_partition(const OrbitRep& o) {
  return conjugate(Partition(std::vector<std::int64_t>(o.entries().begin(), o.entries().end())));
}

OrbitRep partition_to_orbit(const Partition& p, const FusionContext& ctx) {
  if (!p.fits_in(ctx.N - 1, ctx.k))
    throw std::invalid_argument("partition_to_orbit: " + p.to_string() + " not inside the (N-1) x k box");
  const Partition c = conjugate(p);
  std::vector<int> entries(static_cast<std::size_t>(ctx.k), 0);
  for (std::size_t i = 0; i < c.length(); ++i) entries[i] = static_cast<int>(c[i]);
  return OrbitRep(ctx.N, std::move(entries));
}

}  // namespace fusionkit
