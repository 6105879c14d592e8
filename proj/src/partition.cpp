#include "fusionkit/partition.hpp"

#include <numeric>

#include "fusionkit/checked.hpp"

namespace fusionkit {

namespace {

std::string join(std::span<const std::int64_t> v, char open, char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  out += close;
  return out;
}

}  // namespace

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

std::int64_t Partition::boxes() const {
  std::int64_t total = 0;
  for (auto p : parts_) total = checked_add(total, p);
  return total;
}

bool Partition::fits_in(std::int64_t rows, std::int64_t cols) const {
  return static_cast<std::int64_t>(parts_.size()) <= rows && (parts_.empty() || parts_[0] <= cols);
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const { return join(parts_, '[', ']'); }

SkewShape::SkewShape(Partition outer_, Partition inner_) : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner)) throw std::invalid_argument("SkewShape: inner partition not contained in outer");
}

Content::Content(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  for (auto c : counts_)
    if (c < 0) throw std::invalid_argument("Content: negative count");
}

std::int64_t Content::total() const {
  std::int64_t total = 0;
  for (auto c : counts_) total = checked_add(total, c);
  return total;
}

Weight::Weight(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto a : coeffs_)
    if (a < 0) throw std::invalid_argument("Weight: coefficients must be non-negative");
}

std::int64_t Weight::level() const {
  std::int64_t total = 0;
  for (auto a : coeffs_) total = checked_add(total, a);
  return total;
}

std::string Weight::to_string() const { return join(coeffs_, '{', '}'); }

std::string LatticeWeight::to_string() const { return join(coeffs, '{', '}'); }

}  // namespace fusionkit
