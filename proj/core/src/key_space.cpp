#include "symidem/key_space.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "symidem/errors.hpp"

namespace symidem {

namespace {

constexpr std::uint64_t kMaxCodeTable = std::uint64_t{1} << 23;

void enumerate(std::size_t d, std::size_t n, std::size_t start, std::vector<std::uint8_t>& prefix,
               std::vector<MultiIndex>& out) {
  if (prefix.size() == n) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t i = start; i < d; ++i) {
    prefix.push_back(static_cast<std::uint8_t>(i));
    enumerate(d, n, i, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

KeySpace::KeySpace(std::size_t d, std::size_t n) : d_(d), n_(n) {
  if (d == 0 || d > MultiIndex::kMaxIndex + 1) throw ArgumentError("key space: bad dimension");
  if (n > MultiIndex::kMaxDegree) throw ArgumentError("key space: degree exceeds 16");

  std::vector<std::uint8_t> prefix;
  enumerate(d, n, 0, prefix, keys_);

  const Rational n_fact = factorial(static_cast<long>(n));
  offsets_.reserve(keys_.size() + 1);
  offsets_.push_back(0);
  for (const auto& key : keys_) {
    std::vector<std::uint8_t> arrangement = key.entries();
    std::uint64_t count = 0;
    do {
      arrangements_.insert(arrangements_.end(), arrangement.begin(), arrangement.end());
      ++count;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    offsets_.push_back(arrangements_.size());
    counts_.push_back(count);
    Rational mu_fact(1);
    for (std::size_t mu : key.multiplicities(d)) mu_fact *= factorial(static_cast<long>(mu));
    weights_.push_back(mu_fact / n_fact);
  }

  powers_.resize(d);
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < d; ++i) {
    powers_[i] = power;
    power *= n + 1;
  }
  // power is now (n+1)^d, an upper bound on every code.
  if (power <= kMaxCodeTable) code_table_.assign(power, -1);
  for (std::size_t r = 0; r < keys_.size(); ++r) {
    std::uint64_t code = 0;
    for (std::size_t p = 0; p < n; ++p) code += powers_[keys_[r][p]];
    if (!code_table_.empty()) {
      code_table_[code] = static_cast<std::int32_t>(r);
    } else {
      code_map_.emplace(code, r);
    }
  }
}

std::optional<std::size_t> KeySpace::rank(const MultiIndex& key) const {
  if (key.degree() != n_ || key.span_dimension() > d_) return std::nullopt;
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

std::span<const std::uint8_t> KeySpace::arrangements(std::size_t rank) const {
  return {arrangements_.data() + offsets_[rank], offsets_[rank + 1] - offsets_[rank]};
}

std::size_t KeySpace::rank_of_code(std::uint64_t code) const {
  if (!code_table_.empty()) return static_cast<std::size_t>(code_table_[code]);
  return code_map_.at(code);
}

const KeySpace& key_space(std::size_t d, std::size_t n) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<KeySpace>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{d, n}];
  if (!slot) slot = std::make_unique<KeySpace>(d, n);
  return *slot;
}

const KeySpace& key_space(AlgebraKind kind, std::size_t n) { return key_space(dimension(kind), n); }

}  // namespace symidem
