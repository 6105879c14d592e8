#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fusionkit/orbit_rep.hpp"
#include "fusionkit/partition.hpp"

namespace fusionkit {

Partition conjugate(const Partition& p);

/// At most one box in each column.
bool is_row_strip(const SkewShape& s, std::int64_t m);
/// At most one box in each row.
bool is_column_strip(const SkewShape& s, std::int64_t m);
/// Row strip with outer_1 - inner_N <= k. Throws if outer has more than N rows.
bool is_cylindric_row_strip(const SkewShape& s, std::int64_t m, const FusionContext& ctx);

/// p ~ q: consecutive differences of the first N parts agree.
bool equivalent(const Partition& p, const Partition& q, int N);
/// Removes all columns of height N. Requires length(p) <= N.
Partition reduce_full_columns(const Partition& p, int N);

/// All partitions whose diagram fits in rows x cols, in graded-lex order.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Calls `visit(nu)` for every nu with nu/lambda an m-row strip, nu_1 <= max_first_row
/// and length(nu) <= max_rows. Order: lexicographic on the added boxes per row.
void for_each_row_strip(const Partition& lambda, std::int64_t m, std::int64_t max_first_row,
                        std::size_t max_rows, const std::function<void(const Partition&)>& visit);

/// Semistandard filling of a skew shape. rows[i] lists the entries of row i
/// (row 0 the longest) from column inner_i + 1 to outer_i.
struct Tableau {
  SkewShape shape;
  std::vector<std::vector<int>> rows;

  /// Entry in row r, column c (both 1-based); 0 if the cell is not in the skew shape.
  int entry(std::size_t r, std::int64_t c) const;
  Content content() const;
};

/// Every tableau of shape s and the given content.
std::vector<Tableau> enumerate_tableaux(const SkewShape& s, const Content& content);

/// For every column p with both cells present: the entry in row N, column p is
/// strictly less than the entry in row 1, column k + p.
bool is_cylindric(const Tableau& t, const FusionContext& ctx);

/// Fusion skew Kostka number K^{(N,k)}_{outer/inner, content}.
std::int64_t count_cylindric_tableaux(const SkewShape& s, const Content& content, const FusionContext& ctx);

Partition weight_to_partition(const Weight& w);
/// Requires length(p) <= N.
Weight partition_to_weight(const Partition& p, int N);

/// All weights of A_{N-1} with level <= k, ordered like their partitions in basis order.
std::vector<Weight> level_weights(const FusionContext& ctx);

OrbitRep weight_to_orbit(const Weight& w, const FusionContext& ctx);
Weight orbit_to_weight(const OrbitRep& o);
/// Conjugate of the standard form read as a partition.
Partition orbit_to_partition(const OrbitRep& o);
/// Inverse of orbit_to_partition. Requires p inside the (N-1) x k box.
OrbitRep partition_to_orbit(const Partition& p, const FusionContext& ctx);

}  // namespace fusionkit
