#include "fusionkit/affine_weyl.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "fusionkit/checked.hpp"
#include "fusionkit/combinatorics.hpp"

namespace fusionkit {

namespace {

void require_rank(const Weight& w, int N, const char* where) {
  if (N < 2) throw std::invalid_argument(std::string(where) + ": N must be >= 2");
  if (w.rank() != N)
    throw std::invalid_argument(std::string(where) + ": weight " + w.to_string() + " is not a weight of A_" +
                                std::to_string(N - 1));
}

Weight sequence_to_weight(const std::vector<std::int64_t>& s) {
  std::vector<std::int64_t> coeffs(s.size() - 1);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) coeffs[i] = s[i] - s[i + 1];
  return Weight(std::move(coeffs));
}

// Insertion sort into strictly decreasing order. Returns the number of
// transpositions used, or nullopt if two entries coincide.
std::optional<int> sort_strict(std::vector<std::int64_t>& s) {
  int swaps = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = i; j > 0 && s[j - 1] <= s[j]; --j) {
      if (s[j - 1] == s[j]) return std::nullopt;
      std::swap(s[j - 1], s[j]);
      ++swaps;
    }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] == s[i]) return std::nullopt;
  return swaps;
}

// Shifts each content by mu + rho, folds it into the dominant chamber (and,
// with a level, the alcove), and collects the signed results.
WeightExpansion shifted_alternating_sum(const Weight& lambda, const Weight& mu, int N, std::optional<int> level) {
  const Partition shape = weight_to_partition(lambda);
  const Partition base = weight_to_partition(mu);
  const auto n = static_cast<std::size_t>(N);

  WeightExpansion out;
  for (const auto& [content, mult] : tableau_contents(shape, N)) {
    std::vector<std::int64_t> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = content[i] + base[i] + static_cast<std::int64_t>(n - 1 - i);

    int sign = 1;
    bool dropped = false;
    // Every affine reflection lowers s_1 - s_N, so this terminates.
    for (;;) {
      const auto swaps = sort_strict(s);
      if (!swaps) {
        dropped = true;
        break;
      }
      if (*swaps % 2) sign = -sign;
      if (!level) break;
      const std::int64_t wall = *level + N;
      const std::int64_t spread = s.front() - s.back();
      if (spread < wall) break;
      if (spread == wall) {
        dropped = true;
        break;
      }
      const std::int64_t first = s.front();
      s.front() = s.back() + wall;
      s.back() = first - wall;
      sign = -sign;
    }
    if (dropped) continue;
    for (std::size_t i = 0; i < n; ++i) s[i] -= static_cast<std::int64_t>(n - 1 - i);
    out.add(sequence_to_weight(s), checked_mul(sign, mult));
  }
  for (const auto& [w, c] : out)
    if (c < 0) throw std::logic_error("alternating sum left a negative multiplicity at " + w.to_string());
  return out;
}

}  // namespace

std::map<std::vector<std::int64_t>, std::int64_t> tableau_contents(const Partition& lambda, int N) {
  if (N < 1) throw std::invalid_argument("tableau_contents: N must be >= 1");
  if (lambda.boxes() > kTableauBoxLimit)
    throw std::invalid_argument("tableau_contents: shape " + lambda.to_string() + " exceeds " +
                                std::to_string(kTableauBoxLimit) + " boxes");
  const auto n = static_cast<std::size_t>(N);
  std::map<std::vector<std::int64_t>, std::int64_t> out;
  if (lambda.length() > n) return out;
  if (lambda.empty()) {
    out[std::vector<std::int64_t>(n, 0)] = 1;
    return out;
  }

  // Entry value i fills a row strip; state is (partition filled so far, counts used).
  std::map<std::pair<Partition, std::vector<std::int64_t>>, std::int64_t> state{{{Partition{}, {}}, 1}};
  for (std::size_t value = 0; value < n; ++value) {
    std::map<std::pair<Partition, std::vector<std::int64_t>>, std::int64_t> next;
    for (const auto& [key, ways] : state) {
      const auto& [filled, counts] = key;
      const std::int64_t room = lambda.boxes() - filled.boxes();
      const std::int64_t lo = value + 1 == n ? room : 0;
      for (std::int64_t m = lo; m <= room; ++m)
        for_each_row_strip(filled, m, lambda[0], lambda.length(), [&](const Partition& nu) {
          if (!lambda.contains(nu)) return;
          auto extended = counts;
          extended.push_back(m);
          auto& slot = next[{nu, std::move(extended)}];
          slot = checked_add(slot, ways);
        });
    }
    state = std::move(next);
  }
  for (const auto& [key, ways] : state)
    if (key.first == lambda) out[key.second] = checked_add(out[key.second], ways);
  return out;
}

WeightSpaces weight_multiplicities(const Weight& lambda, int N) {
  require_rank(lambda, N, "weight_multiplicities");
  WeightSpaces out;
  for (const auto& [content, mult] : tableau_contents(weight_to_partition(lambda), N)) {
    LatticeWeight w;
    for (std::size_t i = 0; i + 1 < content.size(); ++i) w.coeffs.push_back(content[i] - content[i + 1]);
    out.add(w, mult);
  }
  return out;
}

WeightExpansion racah_speiser_tensor(const Weight& lambda, const Weight& mu, int N) {
  require_rank(lambda, N, "racah_speiser_tensor");
  require_rank(mu, N, "racah_speiser_tensor");
  return shifted_alternating_sum(lambda, mu, N, std::nullopt);
}

WeightExpansion kac_walton_fusion(const Weight& lambda, const Weight& mu, const FusionContext& ctx) {
  require_rank(lambda, ctx.N, "kac_walton_fusion");
  require_rank(mu, ctx.N, "kac_walton_fusion");
  for (const Weight* w : {&lambda, &mu})
    if (w->level() > ctx.k)
      throw std::invalid_argument("kac_walton_fusion: weight " + w->to_string() + " has level above " +
                                  std::to_string(ctx.k));
  return shifted_alternating_sum(lambda, mu, ctx.N, ctx.k);
}

}  // namespace fusionkit
