#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "symidem/algebra.hpp"
#include "symidem/multi_index.hpp"
#include "symidem/scalars.hpp"

namespace symidem {

/// Every sorted key of degree n over d basis indices, in lexicographic order,
/// with its distinct arrangements and symmetrization weight. Shared, immutable,
/// built once per (d, n).
class KeySpace {
public:
  KeySpace(std::size_t d, std::size_t n);

  std::size_t dim() const { return d_; }
  std::size_t degree() const { return n_; }
  std::size_t size() const { return keys_.size(); }

  const std::vector<MultiIndex>& keys() const { return keys_; }
  const MultiIndex& key(std::size_t rank) const { return keys_[rank]; }
  std::optional<std::size_t> rank(const MultiIndex& key) const;

  /// Distinct arrangements of key(rank), n entries each, flattened.
  std::span<const std::uint8_t> arrangements(std::size_t rank) const;
  std::uint64_t arrangement_count(std::size_t rank) const { return counts_[rank]; }
  /// prod(mu_j!) / n!, the plain-basis coefficient of a single monomial's symmetrization.
  const Rational& weight(std::size_t rank) const { return weights_[rank]; }

  /// Multiset code sum_p (n+1)^{i_p}; identifies a key regardless of order.
  std::uint64_t index_power(std::size_t index) const { return powers_[index]; }
  std::size_t rank_of_code(std::uint64_t code) const;

private:
  std::size_t d_;
  std::size_t n_;
  std::vector<MultiIndex> keys_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint8_t> arrangements_;
  std::vector<std::uint64_t> counts_;
  std::vector<Rational> weights_;
  std::vector<std::uint64_t> powers_;
  std::vector<std::int32_t> code_table_;
  std::unordered_map<std::uint64_t, std::size_t> code_map_;
};

/// Cached key space for (dimension(kind), n). Thread-safe.
const KeySpace& key_space(AlgebraKind kind, std::size_t n);
const KeySpace& key_space(std::size_t d, std::size_t n);

}  // namespace symidem
