#include "symidem/multi_index.hpp"

#include <algorithm>

#include "symidem/errors.hpp"

namespace symidem {

MultiIndex::MultiIndex(std::span<const std::uint8_t> entries) {
  if (entries.size() > kMaxDegree) throw ArgumentError("multi-index degree exceeds 16");
  std::vector<std::uint8_t> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end());
  degree_ = static_cast<std::uint8_t>(sorted.size());
  for (std::size_t p = 0; p < sorted.size(); ++p) {
    if (sorted[p] > kMaxIndex) throw ArgumentError("multi-index entry exceeds 15");
    packed_ |= static_cast<std::uint64_t>(sorted[p]) << shift(p);
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) {
  std::vector<std::uint8_t> raw;
  for (int e : entries) {
    if (e < 0) throw ArgumentError("negative multi-index entry");
    raw.push_back(static_cast<std::uint8_t>(e));
  }
  *this = MultiIndex(raw);
}

std::vector<std::uint8_t> MultiIndex::entries() const {
  std::vector<std::uint8_t> out(degree_);
  for (std::size_t p = 0; p < degree_; ++p) out[p] = (*this)[p];
  return out;
}

std::size_t MultiIndex::span_dimension() const {
  return degree_ == 0 ? 0 : static_cast<std::size_t>((*this)[degree_ - 1]) + 1;
}

std::vector<std::size_t> MultiIndex::multiplicities(std::size_t d) const {
  std::vector<std::size_t> mu(d, 0);
  for (std::size_t p = 0; p < degree_; ++p) mu.at((*this)[p]) += 1;
  return mu;
}

std::uint64_t MultiIndex::arrangement_count() const {
  // Multiply binomials run by run: C(n, mu_1) * C(n - mu_1, mu_2) * ...
  std::uint64_t count = 1;
  std::size_t placed = 0;
  std::size_t p = 0;
  while (p < degree_) {
    std::size_t q = p;
    while (q < degree_ && (*this)[q] == (*this)[p]) ++q;
    for (std::size_t r = 1; r <= q - p; ++r) {
      count = count * (placed + r) / r;
    }
    placed += q - p;
    p = q;
  }
  return count;
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  std::vector<std::uint8_t> all = a.entries();
  const auto rest = b.entries();
  all.insert(all.end(), rest.begin(), rest.end());
  return MultiIndex(all);
}

}  // namespace symidem
