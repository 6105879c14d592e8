#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <utility>

#include "fusionkit/checked.hpp"

namespace fusionkit {

/// Finite formal sum of basis labels with signed 64-bit coefficients.
/// Zero coefficients are never stored, so two sums are equal iff their maps are.
template <class Key, class Compare = std::less<Key>>
class LinearCombination {
 public:
  using map_type = std::map<Key, std::int64_t, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  LinearCombination(std::initializer_list<std::pair<const Key, std::int64_t>> terms) {
    for (const auto& [key, c] : terms) add(key, c);
  }

  static LinearCombination single(const Key& key, std::int64_t c = 1) {
    LinearCombination out;
    out.add(key, c);
    return out;
  }

  void add(const Key& key, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const LinearCombination& other, std::int64_t scale) {
    if (scale == 0) return;
    for (const auto& [key, c] : other.terms_) add(key, checked_mul(c, scale));
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    add_scaled(other, 1);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    add_scaled(other, -1);
    return *this;
  }

  std::int64_t coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  bool all_non_negative() const {
    for (const auto& [key, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  map_type terms_;
};

}  // namespace fusionkit
