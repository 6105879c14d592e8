#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fusionkit/linear_combination.hpp"
#include "fusionkit/partition.hpp"

namespace fusionkit {

using WeightExpansion = LinearCombination<Weight>;
using WeightSpaces = LinearCombination<LatticeWeight>;

/// Shapes above this many boxes are refused by the tableau enumerations here.
inline constexpr std::int64_t kTableauBoxLimit = 30;

/// Number of semistandard tableaux of shape lambda with entries 1..N, per content.
/// Contents have exactly N entries.
std::map<std::vector<std::int64_t>, std::int64_t> tableau_contents(const Partition& lambda, int N);

/// Weight-space multiplicities of the irreducible sl_N module of highest weight lambda.
WeightSpaces weight_multiplicities(const Weight& lambda, int N);

/// V^lambda (x) V^mu by shifting tableau contents and sorting under the finite Weyl group.
WeightExpansion racah_speiser_tensor(const Weight& lambda, const Weight& mu, int N);

/// Level-k fusion V^lambda (x)_k V^mu: as racah_speiser_tensor, with the affine
/// reflection folding every sequence into a_first - a_last < N + k.
WeightExpansion kac_walton_fusion(const Weight& lambda, const Weight& mu, const FusionContext& ctx);

}  // namespace fusionkit
