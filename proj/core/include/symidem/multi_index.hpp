#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace symidem {

/// Sorted multiset of basis indices: the label of one S_n-orbit of monomials
/// e_{i1} (x) ... (x) e_{in}. Entries are packed four bits each, first entry in
/// the most significant nibble, so integer order on equal degrees is
/// lexicographic order on the entries.
class MultiIndex {
public:
  static constexpr std::size_t kMaxDegree = 16;
  static constexpr std::size_t kMaxIndex = 15;

  MultiIndex() = default;
  /// Sorts the entries; throws ArgumentError on degree > 16 or an index > 15.
  explicit MultiIndex(std::span<const std::uint8_t> entries);
  MultiIndex(std::initializer_list<int> entries);

  std::size_t degree() const { return degree_; }
  std::uint8_t operator[](std::size_t p) const {
    return static_cast<std::uint8_t>((packed_ >> shift(p)) & 0xF);
  }
  std::vector<std::uint8_t> entries() const;

  /// Largest entry plus one; 0 for the empty key.
  std::size_t span_dimension() const;
  /// Multiplicity of each index below d.
  std::vector<std::size_t> multiplicities(std::size_t d) const;
  /// Number of distinct arrangements n! / prod(mu_j!).
  std::uint64_t arrangement_count() const;

  /// Sorted union of the two multisets.
  friend MultiIndex concat(const MultiIndex& a, const MultiIndex& b);

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.packed_ <=> b.packed_;
  }

private:
  static constexpr unsigned shift(std::size_t p) { return static_cast<unsigned>(4 * (15 - p)); }
  std::uint64_t packed_ = 0;
  std::uint8_t degree_ = 0;
};

}  // namespace symidem
