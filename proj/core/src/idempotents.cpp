#include "symidem/idempotents.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "symidem/errors.hpp"

namespace symidem {

namespace {

constexpr std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

void check_degree(std::size_t n) {
  if (n < 1) throw ArgumentError("n must be at least 1");
}

void require_quaternionic_or_octonionic(AlgebraKind kind) {
  if (kind == AlgebraKind::Re1) {
    throw ArgumentError("closed form is stated for the quaternions and octonions only");
  }
}

SymTensor scalar_one(AlgebraKind kind, FieldTag field) {
  return SymTensor::scalar(kind, field, 1);
}

const SymTensor& cached_recursive(std::size_t n, std::size_t m, AlgebraKind kind);

SymTensor recursive_uncached(std::size_t n, std::size_t m, AlgebraKind kind) {
  const FieldTag real = FieldTag::RationalReal;
  if (n == 0) return scalar_one(kind, real);
  if (n == 1) return SymTensor::unit(kind, real, 1);
  if (m < n) {
    SymTensor out = graft(triangle(kind, real), cached_recursive(n - 2, m - 1, kind));
    out *= beta(n, m, dimension(kind)).value.inverse();
    return out;
  }
  SymTensor out = SymTensor::unit(kind, real, n);
  for (std::size_t lower = ceil_half(n); lower < n; ++lower) out -= cached_recursive(n, lower, kind);
  return out;
}

std::mutex cache_mutex;
std::map<std::tuple<std::size_t, std::size_t, AlgebraKind>, SymTensor> recursive_cache;
std::map<std::tuple<std::size_t, std::size_t, AlgebraKind, FieldTag>, SymTensor> field_cache;

const SymTensor& cached_recursive(std::size_t n, std::size_t m, AlgebraKind kind) {
  const auto key = std::make_tuple(n, m, kind);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = recursive_cache.find(key); it != recursive_cache.end()) return it->second;
  }
  SymTensor value = recursive_uncached(n, m, kind);
  std::lock_guard lock(cache_mutex);
  return recursive_cache.try_emplace(key, std::move(value)).first->second;
}

// The top idempotent e^{(j)}_j assembled from closed forms only.
SymTensor closed_top(std::size_t j, AlgebraKind kind, FieldTag field) {
  if (j == 0) return scalar_one(kind, field);
  SymTensor out = SymTensor::unit(kind, field, j);
  for (std::size_t m = ceil_half(j); m < j; ++m) out -= central_idempotent_closed(j, m, kind, field);
  return out;
}

SymTensor e2_projector(std::size_t n, int delta, FieldTag field) {
  SymTensor out = SymTensor::unit(AlgebraKind::Quaternion, field, n);
  SymTensor e2 = tensor_power(AlgebraElement::basis(AlgebraKind::Quaternion, field, 2), n);
  e2 *= Rational(delta);
  out += e2;
  out *= Rational(1, 2);
  return out;
}

void check_theorem1_range(std::size_t n, std::size_t ell) {
  check_degree(n);
  if (ell < ceil_half(n) || ell > n) {
    throw ArgumentError("ell must lie in [ceil(n/2), n] = [" + std::to_string(ceil_half(n)) + ", " +
                        std::to_string(n) + "], got " + std::to_string(ell));
  }
}

Family theorem3_family(Family f) {
  switch (f) {
    case Family::Thm1a: return Family::Thm3a;
    case Family::Thm1b: return Family::Thm3b;
    case Family::Thm1cSquare: return Family::Thm3cSquare;
    case Family::Thm1cDelta: return Family::Thm3cDelta;
    default: return f;
  }
}

}  // namespace

SymTensor triangle(AlgebraKind kind, FieldTag field) {
  const std::size_t d = dimension(kind);
  SymTensor::Terms terms;
  for (std::size_t i = 0; i < d; ++i) {
    terms.emplace(MultiIndex{static_cast<int>(i), static_cast<int>(i)},
                  Rational(1, static_cast<long>(d)));
  }
  return SymTensor(kind, field, 2, std::move(terms));
}

SymTensor triangle_n(AlgebraKind kind, FieldTag field, std::size_t n) {
  if (n < 2) throw ArgumentError("triangle_n requires n >= 2");
  return graft(triangle(kind, field), SymTensor::unit(kind, field, n - 2));
}

BetaValue beta(std::size_t n, std::size_t m, std::size_t d) {
  if (n < 2) throw ArgumentError("beta requires n >= 2");
  check_partition_index(n, m);
  const long nl = static_cast<long>(n), ml = static_cast<long>(m), dl = static_cast<long>(d);
  return {n, m, d, Rational(2 * (nl - ml) * (2 * ml + dl - 2), dl * nl * (nl - 1))};
}

void check_partition_index(std::size_t n, std::size_t m, const char* name) {
  check_degree(n);
  if (m < ceil_half(n) || m > n) {
    throw ArgumentError(std::string(name) + " must lie in [ceil(n/2), n] = [" +
                        std::to_string(ceil_half(n)) + ", " + std::to_string(n) + "], got " +
                        std::to_string(m));
  }
}

SymTensor central_idempotent_product(std::size_t n, std::size_t m, AlgebraKind kind,
                                     FieldTag field) {
  check_partition_index(n, m);
  if (n == 1) return SymTensor::unit(kind, field, 1);
  const std::size_t d = dimension(kind);
  const SymTensor tri = triangle_n(kind, field, n);
  const SymTensor one = SymTensor::unit(kind, field, n);
  const Rational bm = beta(n, m, d).value;
  std::optional<SymTensor> out;
  for (std::size_t other = ceil_half(n); other <= n; ++other) {
    if (other == m) continue;
    const Rational bo = beta(n, other, d).value;
    SymTensor factor = tri - bo * one;
    factor *= (bm - bo).inverse();
    out = out ? mul(*out, factor) : factor;
  }
  return out ? *out : one;
}

SymTensor central_idempotent_recursive(std::size_t n, std::size_t m, AlgebraKind kind,
                                       FieldTag field) {
  check_partition_index(n, m);
  return recursive_uncached(n, m, kind).with_field(field);
}

SymTensor central_idempotent_closed(std::size_t n, std::size_t m, AlgebraKind kind,
                                    FieldTag field) {
  require_quaternionic_or_octonionic(kind);
  check_partition_index(n, m);
  if (m == n) throw ArgumentError("closed form requires m <= n-1");
  const long nl = static_cast<long>(n), ml = static_cast<long>(m);
  const long c = 2 * ml - nl;
  Rational coefficient = binomial(nl, ml);
  if (kind == AlgebraKind::Quaternion) {
    coefficient *= Rational(c + 1, ml + 1);
  } else {
    coefficient *= pow(Rational(2), static_cast<unsigned>(n - m));
    coefficient *= Rational((c + 1) * (c + 2) * (c + 3), (ml + 1) * (ml + 2) * (ml + 3));
  }
  SymTensor out = graft(graft_power(triangle(kind, field), n - m),
                        closed_top(static_cast<std::size_t>(c), kind, field));
  out *= coefficient;
  return out;
}

const SymTensor& central_idempotent(std::size_t n, std::size_t m, AlgebraKind kind,
                                    FieldTag field) {
  check_partition_index(n, m);
  const auto key = std::make_tuple(n, m, kind, field);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = field_cache.find(key); it != field_cache.end()) return it->second;
  }
  SymTensor value = cached_recursive(n, m, kind).with_field(field);
  std::lock_guard lock(cache_mutex);
  return field_cache.try_emplace(key, std::move(value)).first->second;
}

AlgebraElement a_element(FieldTag field, AlgebraKind kind) {
  if (field != FieldTag::GaussianComplex) throw ArgumentError("a requires the Gaussian field");
  std::vector<GaussRational> coords(dimension(kind));
  coords[0] = Rational(1, 2);
  coords[1] = GaussRational(0, Rational(1, 2));
  return AlgebraElement(kind, field, std::move(coords));
}

AlgebraElement ac_element(FieldTag field, AlgebraKind kind) {
  return conj(a_element(field, kind));
}

SymTensor square_element(AlgebraKind kind, FieldTag field) {
  return SymTensor(kind, field, 2,
                   SymTensor::Terms{{MultiIndex{0, 0}, Rational(1, 2)}, {MultiIndex{1, 1}, Rational(1, 2)}});
}

Rational waring_coeff(std::size_t n, std::size_t k) {
  if (n < 1 || k > n / 2) throw ArgumentError("waring_coeff requires n >= 1 and 0 <= k <= n/2");
  const long nl = static_cast<long>(n), kl = static_cast<long>(k);
  Rational out = Rational(nl, nl - kl) * binomial(nl - kl, kl);
  return k % 2 == 0 ? out : -out;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Thm1a: return "thm1a";
    case Family::Thm1b: return "thm1b";
    case Family::Thm1cSquare: return "thm1c-square";
    case Family::Thm1cDelta: return "thm1c-delta";
    case Family::Thm3a: return "thm3a";
    case Family::Thm3b: return "thm3b";
    case Family::Thm3cSquare: return "thm3c-square";
    case Family::Thm3cDelta: return "thm3c-delta";
    case Family::Central: return "central";
    case Family::CyclicPlane: return "cyclic-plane";
  }
  return "unknown";
}

Family parse_family(const std::string& text) {
  for (Family f : {Family::Thm1a, Family::Thm1b, Family::Thm1cSquare, Family::Thm1cDelta,
                   Family::Thm3a, Family::Thm3b, Family::Thm3cSquare, Family::Thm3cDelta,
                   Family::Central, Family::CyclicPlane}) {
    if (to_string(f) == text) return f;
  }
  throw ArgumentError("unknown idempotent family '" + text + "'");
}

std::size_t theorem1_count(std::size_t n, std::size_t ell, FieldTag field) {
  check_theorem1_range(n, ell);
  const std::size_t size = 2 * ell - n + 1;
  return field == FieldTag::RationalReal && n % 2 == 1 ? size / 2 : size;
}

std::size_t theorem3_count(std::size_t n, std::size_t m, FieldTag field) {
  check_partition_index(n, m);
  const std::size_t c = 2 * m - n;
  if (n % 2 == 0) return (c + 2) * (c + 2) / 4;
  return (c + 1) * (c + 3) / (field == FieldTag::RationalReal ? 8 : 4);
}

std::size_t corollary2_count(std::size_t n, FieldTag field) {
  check_degree(n);
  if (n % 2 == 0) return (n + 2) * (n + 2) / 4;
  return (n + 1) * (n + 3) / (field == FieldTag::RationalReal ? 8 : 4);
}

std::size_t corollary4_count(std::size_t n, FieldTag field) {
  check_degree(n);
  if (n % 2 == 0) return (n + 2) * (n + 3) * (n + 4) / 24;
  return (n + 1) * (n + 3) * (n + 5) / (field == FieldTag::RationalReal ? 48 : 24);
}

SymTensor binomial_a_element(std::size_t n, std::size_t k, AlgebraKind kind) {
  if (k > n) throw ArgumentError("k must not exceed n");
  const FieldTag c = FieldTag::GaussianComplex;
  SymTensor out = graft(tensor_power(a_element(c, kind), k), tensor_power(ac_element(c, kind), n - k));
  out *= binomial(static_cast<long>(n), static_cast<long>(k));
  return out;
}

SymTensor theorem1_odd_element(std::size_t n, std::size_t ell, std::size_t k) {
  check_theorem1_range(n, ell);
  if (n % 2 == 0) throw ArgumentError("odd family requires odd n");
  if (k + ell < n || k > (n - 1) / 2) throw ArgumentError("k must lie in [n-ell, (n-1)/2]");
  const auto h = AlgebraKind::Quaternion;
  const auto real = FieldTag::RationalReal;
  const long nl = static_cast<long>(n), kl = static_cast<long>(k);
  const Rational lead = binomial(nl, kl) * Rational(nl - 2 * kl) *
                        pow(Rational(1, 2), static_cast<unsigned>(k));
  const SymTensor sq = square_element(h, real);
  SymTensor sum(h, real, n);
  for (std::size_t i = 0; i <= (n - 1) / 2 - k; ++i) {
    const long il = static_cast<long>(i);
    Rational c = lead * pow(Rational(-1, 2), static_cast<unsigned>(i)) *
                 binomial(nl - 2 * kl - il, il) * Rational(1, nl - 2 * kl - il);
    SymTensor term = graft(SymTensor::unit(h, real, n - 2 * k - 2 * i), graft_power(sq, k + i));
    sum += c * term;
  }
  return mul(sum, central_idempotent(n, ell, h, real));
}

SymTensor theorem1_square_element(std::size_t n, std::size_t ell) {
  check_theorem1_range(n, ell);
  if (n % 2 == 1) throw ArgumentError("square element requires even n");
  const auto h = AlgebraKind::Quaternion;
  const auto real = FieldTag::RationalReal;
  SymTensor out = graft_power(square_element(h, real), n / 2);
  out *= pow(Rational(1, 2), static_cast<unsigned>(n / 2)) *
         binomial(static_cast<long>(n), static_cast<long>(n / 2));
  return mul(out, central_idempotent(n, ell, h, real));
}

SymTensor theorem1_delta_element(std::size_t n, std::size_t ell, std::size_t k, int delta,
                                 DeltaSumLimit limit) {
  check_theorem1_range(n, ell);
  if (n % 2 == 1) throw ArgumentError("delta family requires even n");
  if (k + ell < n || k + 1 > n / 2) throw ArgumentError("k must lie in [n-ell, n/2-1]");
  if (delta != 1 && delta != -1) throw ArgumentError("delta must be +1 or -1");
  const auto h = AlgebraKind::Quaternion;
  const auto real = FieldTag::RationalReal;
  const std::size_t big_n = n / 2 - k;
  std::size_t upper = 0;
  switch (limit) {
    case DeltaSumLimit::Support: upper = big_n; break;
    case DeltaSumLimit::HalfDifference: upper = (n - 2 * k) / 4; break;
    case DeltaSumLimit::QuarterMinusHalfK: upper = (n - 4 * (k / 2)) / 4; break;
  }
  const long nl = static_cast<long>(n), kl = static_cast<long>(k), bl = static_cast<long>(big_n);
  const Rational lead = binomial(nl, kl) * Rational(bl) * pow(Rational(1, 2), static_cast<unsigned>(k));
  const SymTensor sq = square_element(h, real);
  const SymTensor co_sq = SymTensor::unit(h, real, 2) - sq;
  SymTensor sum(h, real, n);
  for (std::size_t i = 0; i <= upper; ++i) {
    const long il = static_cast<long>(i);
    const Rational b = binomial(bl - il, il);
    if (b.is_zero()) continue;
    Rational c = lead * pow(Rational(-1, 4), static_cast<unsigned>(i)) * b * Rational(1, bl - il);
    sum += c * graft(graft_power(sq, k + 2 * i), graft_power(co_sq, big_n - 2 * i));
  }
  return mul(mul(sum, e2_projector(n, delta, real)), central_idempotent(n, ell, h, real));
}

SymTensor conjugate_pair_element(std::size_t n, std::size_t ell, std::size_t k,
                                 std::optional<int> delta) {
  check_theorem1_range(n, ell);
  const auto complex = FieldTag::GaussianComplex;
  const SymTensor f =
      mul(binomial_a_element(n, k), central_idempotent(n, ell, AlgebraKind::Quaternion, complex));
  SymTensor out = f + conj_sym(f);
  if (delta) out = mul(out, e2_projector(n, *delta, complex));
  return out.with_field(FieldTag::RationalReal);
}

IdempotentSet theorem1_set(std::size_t n, std::size_t ell, FieldTag field) {
  check_theorem1_range(n, ell);
  const auto h = AlgebraKind::Quaternion;
  IdempotentSet out{{}, {}, central_idempotent(n, ell, h, field), theorem1_count(n, ell, field)};
  auto add = [&](Family f, std::size_t k, std::optional<int> delta, SymTensor t) {
    out.labels.push_back({f, n, ell, std::nullopt, k, delta});
    out.tensors.push_back(std::move(t));
  };
  if (field == FieldTag::GaussianComplex) {
    const SymTensor& e = out.expected_unit;
    for (std::size_t k = n - ell; k <= ell; ++k) add(Family::Thm1a, k, std::nullopt, mul(binomial_a_element(n, k), e));
  } else if (n % 2 == 1) {
    for (std::size_t k = n - ell; k <= (n - 1) / 2; ++k) {
      add(Family::Thm1b, k, std::nullopt, theorem1_odd_element(n, ell, k));
    }
  } else {
    for (std::size_t k = n - ell; k + 1 <= n / 2; ++k) {
      for (int delta : {-1, 1}) add(Family::Thm1cDelta, k, delta, theorem1_delta_element(n, ell, k, delta));
    }
    add(Family::Thm1cSquare, n / 2, std::nullopt, theorem1_square_element(n, ell));
  }
  return out;
}

IdempotentSet theorem3_set(std::size_t n, std::size_t m, FieldTag field) {
  check_partition_index(n, m);
  const auto o = AlgebraKind::Octonion;
  const SymTensor& unit = central_idempotent(n, m, o, field);
  IdempotentSet out{{}, {}, unit, theorem3_count(n, m, field)};
  for (std::size_t ell = ceil_half(n); ell <= m; ++ell) {
    IdempotentSet part = theorem1_set(n, ell, field);
    for (std::size_t i = 0; i < part.tensors.size(); ++i) {
      IdempotentLabel label = part.labels[i];
      label.family = theorem3_family(label.family);
      label.m = m;
      out.labels.push_back(label);
      out.tensors.push_back(mul(embed_sym(part.tensors[i], o), unit));
    }
  }
  return out;
}

IdempotentSet corollary2_set(std::size_t n, FieldTag field) {
  check_degree(n);
  IdempotentSet out{{}, {}, SymTensor::unit(AlgebraKind::Quaternion, field, n), corollary2_count(n, field)};
  for (std::size_t ell = ceil_half(n); ell <= n; ++ell) {
    IdempotentSet part = theorem1_set(n, ell, field);
    out.labels.insert(out.labels.end(), part.labels.begin(), part.labels.end());
    out.tensors.insert(out.tensors.end(), part.tensors.begin(), part.tensors.end());
  }
  return out;
}

IdempotentSet corollary4_set(std::size_t n, FieldTag field) {
  check_degree(n);
  IdempotentSet out{{}, {}, SymTensor::unit(AlgebraKind::Octonion, field, n), corollary4_count(n, field)};
  for (std::size_t m = ceil_half(n); m <= n; ++m) {
    IdempotentSet part = theorem3_set(n, m, field);
    out.labels.insert(out.labels.end(), part.labels.begin(), part.labels.end());
    out.tensors.insert(out.tensors.end(), part.tensors.begin(), part.tensors.end());
  }
  return out;
}

IdempotentSet central_set(std::size_t n, AlgebraKind kind, FieldTag field) {
  check_degree(n);
  IdempotentSet out{{}, {}, SymTensor::unit(kind, field, n), n - ceil_half(n) + 1};
  for (std::size_t m = ceil_half(n); m <= n; ++m) {
    out.labels.push_back({Family::Central, n, std::nullopt, m, std::nullopt, std::nullopt});
    out.tensors.push_back(central_idempotent(n, m, kind, field));
  }
  return out;
}

IdempotentSet cyclic_plane_set(std::size_t n) {
  check_degree(n);
  const auto re1 = AlgebraKind::Re1;
  IdempotentSet out{{}, {}, SymTensor::unit(re1, FieldTag::GaussianComplex, n), n + 1};
  for (std::size_t k = 0; k <= n; ++k) {
    out.labels.push_back({Family::CyclicPlane, n, std::nullopt, std::nullopt, k, std::nullopt});
    out.tensors.push_back(binomial_a_element(n, k, re1));
  }
  return out;
}

}  // namespace symidem
