#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/linear_combination.hpp"
#include "fusionkit/partition.hpp"

namespace fusionkit {

/// Element of the fusion ring in the Schur basis, keyed by partitions inside
/// the (N-1) x k box. Coefficients are signed so that Jacobi-Trudi
/// intermediates fit; finished products are non-negative.
using Expansion = LinearCombination<Partition, GradedLex>;

/// Basis of F(A_{N-1}, k): partitions inside the (N-1) x k box, graded-lex order.
std::vector<Partition> basis(const FusionContext& ctx);

/// S_p * h_m: one term per nu inside N x k with nu/p an m-row strip, reduced.
Expansion pieri_h(const Partition& p, int m, const FusionContext& ctx);
/// S_p * e_m: one term per (N,k)-restricted nu with nu/p an m-column strip, reduced.
Expansion pieri_e(const Partition& p, int m, const FusionContext& ctx);

/// S_p * S_q via the Jacobi-Trudi determinant in the h's and iterated pieri_h.
Expansion multiply(const Partition& p, const Partition& q, const FusionContext& ctx);

/// S_p * h_{eps_1} ... h_{eps_r}, coefficients from count_cylindric_tableaux.
Expansion multiply_by_h_sequence(const Partition& p, const std::vector<std::int64_t>& eps, const FusionContext& ctx);

/// S_p * (h_k)^t.
Partition simple_current_power(const Partition& p, int t, const FusionContext& ctx);

/// Classical (no level) Pieri rule in symmetric polynomials of N variables
/// modulo e_N = 1; labels are reduced to length <= N-1.
Expansion tensor_pieri_h(const Partition& p, std::int64_t m, int N);
/// Tensor product decomposition S_p * S_q via Jacobi-Trudi and tensor_pieri_h.
Expansion tensor_multiply(const Partition& p, const Partition& q, int N);

/// Dense structure constants N^c_{a,b} of a finite-dimensional algebra.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), data_(dim * dim * dim, 0) {}

  std::size_t dim() const { return dim_; }
  std::int64_t& at(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * dim_ + b) * dim_ + c]; }
  std::int64_t at(std::size_t a, std::size_t b, std::size_t c) const { return data_[(a * dim_ + b) * dim_ + c]; }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> data_;
};

struct FusionTable {
  FusionContext ctx;
  std::vector<Partition> basis;
  StructureConstants constants;

  std::size_t index_of(const Partition& p) const;
  std::size_t dim() const { return basis.size(); }
};

inline constexpr std::size_t kDefaultTableCap = 200;

/// Builds every product of basis elements; pairs are evaluated in parallel.
FusionTable full_table(const FusionContext& ctx, std::size_t cap = kDefaultTableCap);
/// Single-threaded reference for full_table.
FusionTable full_table_serial(const FusionContext& ctx, std::size_t cap = kDefaultTableCap);

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  std::optional<std::size_t> identity;
  /// conjugation[a] = the unique b with N^identity_{a,b} = 1, when it exists.
  std::vector<std::size_t> conjugation;

  bool all_passed() const;
  const AxiomCheck& check(const std::string& name) const;
};

/// Checks non-negativity, commutativity, associativity, identity, the
/// conjugation involution and total symmetry of N_{a,b,c}.
AxiomReport verify_fusion_axioms(const StructureConstants& t);

/// Level-k A_1 fusion rule; a, b in 0..k, any c >= 0.
int gepner_witten_a1(int a, int b, int c, int k);

struct RelationViolation {
  Weight lhs, rhs, target;
  std::int64_t raw = 0;
  std::int64_t fusion = 0;
};

struct RelationReport {
  std::size_t triples_checked = 0;
  std::vector<RelationViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For N = 3: raw orbit coefficient == binom(fusion coefficient + 1, 2) on every triple.
RelationReport fw_a2_relation_check(const FusionContext& ctx);

}  // namespace fusionkit
