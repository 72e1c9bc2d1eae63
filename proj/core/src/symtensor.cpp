#include "symidem/symtensor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "symidem/errors.hpp"
#include "symidem/key_space.hpp"
#include "symidem/linalg.hpp"

namespace symidem {

namespace {

void check_key(const MultiIndex& key, AlgebraKind kind, std::size_t degree) {
  if (key.degree() != degree) {
    throw ArgumentError("key degree " + std::to_string(key.degree()) + " != tensor degree " +
                        std::to_string(degree));
  }
  if (key.span_dimension() > dimension(kind)) {
    throw ArgumentError("key index out of range for " + std::string(to_string(kind)));
  }
}

void check_compatible(const SymTensor& x, const SymTensor& y, const char* what) {
  if (x.kind() != y.kind() || x.field() != y.field() || x.degree() != y.degree()) {
    throw ArgumentError(std::string(what) + ": kind/field/degree mismatch");
  }
}

// A tensor scaled by a common denominator so that all coefficients are
// Gaussian integers.
struct ScaledTerm {
  std::size_t rank;
  mpz_class re;
  mpz_class im;
};

struct Scaled {
  mpz_class denom{1};
  std::vector<ScaledTerm> terms;
  bool real = true;
};

Scaled scale(const SymTensor& x, const KeySpace& ks) {
  Scaled out;
  for (const auto& [key, c] : x.terms()) {
    mpz_lcm(out.denom.get_mpz_t(), out.denom.get_mpz_t(), c.re().raw().get_den_mpz_t());
    mpz_lcm(out.denom.get_mpz_t(), out.denom.get_mpz_t(), c.im().raw().get_den_mpz_t());
  }
  out.terms.reserve(x.size());
  for (const auto& [key, c] : x.terms()) {
    ScaledTerm t{*ks.rank(key), 0, 0};
    t.re = out.denom / c.re().raw().get_den() * c.re().raw().get_num();
    t.im = out.denom / c.im().raw().get_den() * c.im().raw().get_num();
    if (t.im != 0) out.real = false;
    out.terms.push_back(std::move(t));
  }
  return out;
}

GaussRational unscale(const mpz_class& re, const mpz_class& im, const mpz_class& denom) {
  return {Rational(re, denom), Rational(im, denom)};
}

// Octonion table split into sign bits and target indices for the hot loops.
struct Table {
  std::array<std::uint8_t, 64> negative{};
  std::array<std::uint8_t, 64> target{};
  Table() {
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        const auto bp = octonion_basis_mul(i, j);
        negative[i * 8 + j] = bp.sign < 0 ? 1 : 0;
        target[i * 8 + j] = static_cast<std::uint8_t>(bp.index);
      }
    }
  }
};

const Table& table() {
  static const Table t;
  return t;
}

// Coordinates of p in span{1, e}: p = u + v e.
std::pair<GaussRational, GaussRational> plane_coordinates(const AlgebraElement& p,
                                                          const AlgebraElement& e) {
  std::size_t j = 1;
  while (j < e.dim() && e[j].is_zero()) ++j;
  const GaussRational u = p[0];
  const GaussRational v = p[j] / e[j];
  AlgebraElement rebuilt = u * AlgebraElement::one(p.kind(), p.field());
  rebuilt += v * e;
  if (!(rebuilt == p)) throw ContractError("e-part does not lie in span{1, e}");
  return {u, v};
}

}  // namespace

SymTensor::SymTensor(AlgebraKind kind, FieldTag field, std::size_t degree)
    : kind_(kind), field_(field), degree_(degree) {
  if (degree > MultiIndex::kMaxDegree) throw ArgumentError("tensor degree exceeds 16");
}

SymTensor::SymTensor(AlgebraKind kind, FieldTag field, std::size_t degree, Terms terms)
    : SymTensor(kind, field, degree) {
  for (auto& [key, c] : terms) {
    check_key(key, kind, degree);
    if (c.is_zero()) continue;
    if (field == FieldTag::RationalReal && !c.is_real()) {
      throw ArgumentError("imaginary coefficient in a rational tensor");
    }
    terms_.emplace_hint(terms_.end(), key, std::move(c));
  }
}

SymTensor SymTensor::unit(AlgebraKind kind, FieldTag field, std::size_t n) {
  return monomial(kind, field, MultiIndex(std::vector<std::uint8_t>(n, 0)));
}

SymTensor SymTensor::scalar(AlgebraKind kind, FieldTag field, const GaussRational& value) {
  return SymTensor(kind, field, 0, Terms{{MultiIndex(), value}});
}

SymTensor SymTensor::monomial(AlgebraKind kind, FieldTag field, const MultiIndex& key) {
  return SymTensor(kind, field, key.degree(), Terms{{key, GaussRational(1)}});
}

SymTensor SymTensor::from_element(const AlgebraElement& x) {
  Terms terms;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    terms.emplace(MultiIndex{static_cast<int>(i)}, x[i]);
  }
  return SymTensor(x.kind(), x.field(), 1, std::move(terms));
}

bool SymTensor::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

GaussRational SymTensor::coeff(const MultiIndex& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? GaussRational() : it->second;
}

SymTensor SymTensor::with_field(FieldTag field) const {
  return SymTensor(kind_, field, degree_, terms_);
}

void SymTensor::check_same(const SymTensor& rhs, const char* what) const {
  check_compatible(*this, rhs, what);
}

SymTensor& SymTensor::operator+=(const SymTensor& rhs) {
  check_same(rhs, "add");
  for (const auto& [key, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& rhs) {
  check_same(rhs, "sub");
  for (const auto& [key, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SymTensor& SymTensor::operator*=(const GaussRational& scalar) {
  if (field_ == FieldTag::RationalReal && !scalar.is_real()) {
    throw ArgumentError("complex scalar applied to a rational tensor");
  }
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

SymTensor SymTensor::operator-() const {
  SymTensor out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

SymTensor symmetrize(std::span<const PlainTerm> terms, AlgebraKind kind, FieldTag field,
                     std::size_t n) {
  SymTensor::Terms out;
  for (const auto& term : terms) {
    if (term.monomial.size() != n) throw ArgumentError("symmetrize: monomial length mismatch");
    const MultiIndex key(term.monomial);
    check_key(key, kind, n);
    out[key] += term.coeff * Rational(1, static_cast<long>(key.arrangement_count()));
  }
  return SymTensor(kind, field, n, std::move(out));
}

std::vector<PlainTerm> plain_terms(const SymTensor& x) {
  std::vector<PlainTerm> out;
  for (const auto& [key, c] : x.terms()) {
    std::vector<std::uint8_t> arrangement = key.entries();
    do {
      out.push_back({arrangement, c});
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }
  return out;
}

SymTensor mul(const SymTensor& x, const SymTensor& y) {
  check_compatible(x, y, "mul");
  const std::size_t n = x.degree();
  if (n == 0) {
    return SymTensor::scalar(x.kind(), x.field(),
                             x.coeff(MultiIndex()) * y.coeff(MultiIndex()))
        .with_field(x.field());
  }
  if (x.is_zero() || y.is_zero()) return SymTensor(x.kind(), x.field(), n);

  const KeySpace& ks = key_space(x.kind(), n);
  const Scaled xs = scale(x, ks);
  const Scaled ys = scale(y, ks);
  const bool complex = !(xs.real && ys.real);
  const Table& tbl = table();

  const std::size_t keys = ks.size();
  std::vector<mpz_class> acc_re(keys), acc_im(keys), tot_re(keys), tot_im(keys);
  std::vector<std::uint8_t> touched(keys, 0);
  std::vector<std::size_t> touched_list;
  std::vector<std::uint8_t> total_touched(keys, 0);
  std::array<std::uint8_t, MultiIndex::kMaxDegree> left{};
  std::array<std::uint64_t, 8> power{};
  for (std::size_t i = 0; i < ks.dim(); ++i) power[i] = ks.index_power(i);
  mpz_class scratch;

  for (const auto& xt : xs.terms) {
    const MultiIndex& key_i = ks.key(xt.rank);
    for (std::size_t p = 0; p < n; ++p) left[p] = static_cast<std::uint8_t>(key_i[p] * 8);
    for (const auto& yt : ys.terms) {
      const auto arrangements = ks.arrangements(yt.rank);
      const bool y_re = yt.re != 0;
      const bool y_im = yt.im != 0;
      for (std::size_t a = 0; a < arrangements.size(); a += n) {
        std::uint64_t code = 0;
        std::uint8_t negative = 0;
        for (std::size_t p = 0; p < n; ++p) {
          const std::size_t slot = left[p] + arrangements[a + p];
          negative ^= tbl.negative[slot];
          code += power[tbl.target[slot]];
        }
        const std::size_t k = ks.rank_of_code(code);
        if (!touched[k]) {
          touched[k] = 1;
          touched_list.push_back(k);
        }
        if (negative) {
          if (y_re) mpz_sub(acc_re[k].get_mpz_t(), acc_re[k].get_mpz_t(), yt.re.get_mpz_t());
          if (y_im) mpz_sub(acc_im[k].get_mpz_t(), acc_im[k].get_mpz_t(), yt.im.get_mpz_t());
        } else {
          if (y_re) mpz_add(acc_re[k].get_mpz_t(), acc_re[k].get_mpz_t(), yt.re.get_mpz_t());
          if (y_im) mpz_add(acc_im[k].get_mpz_t(), acc_im[k].get_mpz_t(), yt.im.get_mpz_t());
        }
      }
    }
    // tot += A(I) * x_I * acc
    const unsigned long orbit = ks.arrangement_count(xt.rank);
    for (std::size_t k : touched_list) {
      touched[k] = 0;
      total_touched[k] = 1;
      if (complex) {
        // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
        scratch = xt.re * acc_re[k] - xt.im * acc_im[k];
        scratch *= orbit;
        tot_re[k] += scratch;
        scratch = xt.re * acc_im[k] + xt.im * acc_re[k];
        scratch *= orbit;
        tot_im[k] += scratch;
        acc_im[k] = 0;
      } else {
        scratch = xt.re * acc_re[k];
        scratch *= orbit;
        tot_re[k] += scratch;
      }
      acc_re[k] = 0;
    }
    touched_list.clear();
  }

  const mpz_class denom = xs.denom * ys.denom;
  SymTensor::Terms out;
  for (std::size_t k = 0; k < keys; ++k) {
    if (!total_touched[k] || (tot_re[k] == 0 && tot_im[k] == 0)) continue;
    GaussRational c = unscale(tot_re[k], tot_im[k], denom);
    c *= ks.weight(k);
    out.emplace_hint(out.end(), ks.key(k), std::move(c));
  }
  return SymTensor(x.kind(), x.field(), n, std::move(out));
}

SymTensor dense_mul_oracle(const SymTensor& x, const SymTensor& y, std::size_t dense_bound) {
  check_compatible(x, y, "dense_mul_oracle");
  const std::size_t n = x.degree();
  const std::size_t d = dimension(x.kind());
  std::size_t total = 1;
  for (std::size_t p = 0; p < n; ++p) {
    total *= d;
    if (total > dense_bound) {
      throw ResourceError("dense oracle: " + std::to_string(d) + "^" + std::to_string(n) +
                          " coordinates exceed the bound " + std::to_string(dense_bound));
    }
  }

  // Tuple <-> flat index, most significant position first.
  auto decode = [&](std::size_t code) {
    std::vector<std::uint8_t> tuple(n);
    for (std::size_t p = n; p-- > 0;) {
      tuple[p] = static_cast<std::uint8_t>(code % d);
      code /= d;
    }
    return tuple;
  };

  struct Dense {
    mpz_class denom{1};
    std::vector<std::size_t> nonzero;
    std::vector<std::vector<std::uint8_t>> tuples;
    std::vector<mpz_class> re, im;
  };
  auto expand = [&](const SymTensor& t) {
    Dense out;
    std::vector<GaussRational> values(total);
    for (std::size_t code = 0; code < total; ++code) {
      const auto tuple = decode(code);
      values[code] = t.coeff(MultiIndex(tuple));
      if (values[code].is_zero()) continue;
      mpz_lcm(out.denom.get_mpz_t(), out.denom.get_mpz_t(), values[code].re().raw().get_den_mpz_t());
      mpz_lcm(out.denom.get_mpz_t(), out.denom.get_mpz_t(), values[code].im().raw().get_den_mpz_t());
    }
    for (std::size_t code = 0; code < total; ++code) {
      if (values[code].is_zero()) continue;
      out.nonzero.push_back(code);
      out.tuples.push_back(decode(code));
      const mpq_class re = values[code].re().raw() * out.denom;
      const mpq_class im = values[code].im().raw() * out.denom;
      out.re.push_back(re.get_num());
      out.im.push_back(im.get_num());
    }
    return out;
  };

  const Dense dx = expand(x);
  const Dense dy = expand(y);
  std::vector<mpz_class> out_re(total), out_im(total);

  // Each output tuple receives at most min(|x|, |y|) contributions, so 128-bit
  // accumulators are exact whenever the bit budget below holds.
  auto max_bits = [](const Dense& t) {
    std::size_t bits = 0;
    for (std::size_t a = 0; a < t.re.size(); ++a) {
      bits = std::max({bits, mpz_sizeinbase(t.re[a].get_mpz_t(), 2), mpz_sizeinbase(t.im[a].get_mpz_t(), 2)});
    }
    return bits;
  };
  const std::size_t count_bits =
      static_cast<std::size_t>(std::bit_width(std::min(dx.nonzero.size(), dy.nonzero.size())));
  const bool narrow = max_bits(dx) <= 62 && max_bits(dy) <= 62 &&
                      max_bits(dx) + max_bits(dy) + count_bits + 1 <= 124;

  std::vector<std::size_t> target(dy.nonzero.size());
  std::vector<std::int8_t> sign(dy.nonzero.size());
  auto route = [&](std::size_t a) {
    for (std::size_t b = 0; b < dy.nonzero.size(); ++b) {
      int s = 1;
      std::size_t code = 0;
      for (std::size_t p = 0; p < n; ++p) {
        const auto bp = basis_mul(x.kind(), dx.tuples[a][p], dy.tuples[b][p]);
        s *= bp.sign;
        code = code * d + bp.index;
      }
      target[b] = code;
      sign[b] = static_cast<std::int8_t>(s);
    }
  };

  if (narrow) {
    using Wide = __int128;
    std::vector<Wide> acc_re(total, 0), acc_im(total, 0);
    std::vector<std::int64_t> yr(dy.re.size()), yi(dy.im.size());
    for (std::size_t b = 0; b < yr.size(); ++b) {
      yr[b] = dy.re[b].get_si();
      yi[b] = dy.im[b].get_si();
    }
    for (std::size_t a = 0; a < dx.nonzero.size(); ++a) {
      route(a);
      const Wide xr = dx.re[a].get_si(), xi = dx.im[a].get_si();
      for (std::size_t b = 0; b < yr.size(); ++b) {
        const Wide re = xr * yr[b] - xi * yi[b];
        const Wide im = xr * yi[b] + xi * yr[b];
        acc_re[target[b]] += sign[b] > 0 ? re : -re;
        acc_im[target[b]] += sign[b] > 0 ? im : -im;
      }
    }
    auto to_mpz = [](Wide v) {
      const bool negative = v < 0;
      unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
      mpz_class out(static_cast<unsigned long>(u >> 64));
      out <<= 64;
      out += static_cast<unsigned long>(u & ~0UL);
      return negative ? mpz_class(-out) : out;
    };
    for (std::size_t code = 0; code < total; ++code) {
      if (acc_re[code] != 0) out_re[code] = to_mpz(acc_re[code]);
      if (acc_im[code] != 0) out_im[code] = to_mpz(acc_im[code]);
    }
  } else {
    mpz_class re, im;
    for (std::size_t a = 0; a < dx.nonzero.size(); ++a) {
      route(a);
      for (std::size_t b = 0; b < dy.nonzero.size(); ++b) {
        re = dx.re[a] * dy.re[b] - dx.im[a] * dy.im[b];
        im = dx.re[a] * dy.im[b] + dx.im[a] * dy.re[b];
        if (sign[b] > 0) {
          out_re[target[b]] += re;
          out_im[target[b]] += im;
        } else {
          out_re[target[b]] -= re;
          out_im[target[b]] -= im;
        }
      }
    }
  }

  // Read back at sorted tuples; every other arrangement must agree.
  const mpz_class denom = dx.denom * dy.denom;
  SymTensor::Terms terms;
  for (std::size_t code = 0; code < total; ++code) {
    const auto tuple = decode(code);
    if (!std::is_sorted(tuple.begin(), tuple.end())) continue;
    if (out_re[code] != 0 || out_im[code] != 0) {
      terms.emplace(MultiIndex(tuple), unscale(out_re[code], out_im[code], denom));
    }
  }
  for (std::size_t code = 0; code < total; ++code) {
    auto tuple = decode(code);
    std::sort(tuple.begin(), tuple.end());
    std::size_t sorted_code = 0;
    for (auto t : tuple) sorted_code = sorted_code * d + t;
    if (out_re[code] != out_re[sorted_code] || out_im[code] != out_im[sorted_code]) {
      throw ContractError("dense product is not symmetric");
    }
  }
  return SymTensor(x.kind(), x.field(), n, std::move(terms));
}

SymTensor graft(const SymTensor& x, const SymTensor& y) {
  if (x.kind() != y.kind() || x.field() != y.field()) {
    throw ArgumentError("graft: kind/field mismatch");
  }
  const std::size_t n = x.degree() + y.degree();
  SymTensor::Terms out;
  for (const auto& [ki, ci] : x.terms()) {
    for (const auto& [kj, cj] : y.terms()) {
      const MultiIndex key = concat(ki, kj);
      // A(I) A(J) plain monomials, each symmetrizing to weight 1/A(K).
      const Rational factor(static_cast<long>(ki.arrangement_count() * kj.arrangement_count()),
                            static_cast<long>(key.arrangement_count()));
      out[key] += ci * cj * factor;
    }
  }
  return SymTensor(x.kind(), x.field(), n, std::move(out));
}

SymTensor graft_power(const SymTensor& t, std::size_t power) {
  SymTensor out = SymTensor::scalar(t.kind(), t.field(), 1);
  for (std::size_t i = 0; i < power; ++i) out = graft(out, t);
  return out;
}

AlgebraElement epart_n(const SymTensor& x, const UnitImaginary& e_in) {
  if (x.kind() != e_in.kind()) throw ArgumentError("epart_n: kind mismatch");
  const UnitImaginary e = e_in.element().field() == x.field() ? e_in : e_in.with_field(x.field());
  const std::size_t d = dimension(x.kind());
  std::vector<std::pair<GaussRational, GaussRational>> parts;
  parts.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    parts.push_back(plane_coordinates(
        epart(AlgebraElement::basis(x.kind(), x.field(), i), e), e.element()));
  }
  GaussRational u_total, v_total;
  for (const auto& [key, c] : x.terms()) {
    GaussRational u(1), v(0);
    for (std::size_t p = 0; p < key.degree(); ++p) {
      const auto& [pu, pv] = parts[key[p]];
      // (u + v e)(pu + pv e) with e^2 = -1
      GaussRational nu = u * pu - v * pv;
      GaussRational nv = u * pv + v * pu;
      u = std::move(nu);
      v = std::move(nv);
    }
    const GaussRational weight = c * Rational(static_cast<long>(key.arrangement_count()));
    u_total += weight * u;
    v_total += weight * v;
  }
  AlgebraElement out = u_total * AlgebraElement::one(x.kind(), x.field());
  out += v_total * e.element();
  return out;
}

SymTensor embed_sym(const SymTensor& x, AlgebraKind into) {
  if (dimension(into) < dimension(x.kind())) throw ArgumentError("embed_sym: target is smaller");
  return SymTensor(into, x.field(), x.degree(), x.terms());
}

SymTensor tensor_power(const AlgebraElement& x, std::size_t n) {
  std::vector<std::uint8_t> support;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!x[i].is_zero()) support.push_back(static_cast<std::uint8_t>(i));
  }
  SymTensor::Terms out;
  // Multisets over the support, coefficient prod_p x_{K_p}.
  std::vector<std::size_t> pick(n, 0);
  if (support.empty()) return SymTensor(x.kind(), x.field(), n);
  while (true) {
    std::vector<std::uint8_t> entries(n);
    GaussRational c(1);
    for (std::size_t p = 0; p < n; ++p) {
      entries[p] = support[pick[p]];
      c *= x[entries[p]];
    }
    out.emplace(MultiIndex(entries), c);
    std::size_t p = n;
    while (p > 0 && pick[p - 1] + 1 == support.size()) --p;
    if (p == 0) break;
    ++pick[p - 1];
    for (std::size_t q = p; q < n; ++q) pick[q] = pick[p - 1];
  }
  return SymTensor(x.kind(), x.field(), n, std::move(out));
}

SymTensor conj_sym(const SymTensor& x) {
  SymTensor::Terms out;
  for (const auto& [key, c] : x.terms()) out.emplace_hint(out.end(), key, c.conj());
  return SymTensor(x.kind(), x.field(), x.degree(), std::move(out));
}

std::vector<GaussRational> coordinates(const SymTensor& x) {
  const KeySpace& ks = key_space(x.kind(), x.degree());
  std::vector<GaussRational> out(ks.size());
  for (const auto& [key, c] : x.terms()) out[*ks.rank(key)] = c;
  return out;
}

SymTensor from_coordinates(AlgebraKind kind, FieldTag field, std::size_t n,
                           std::span<const GaussRational> coords) {
  const KeySpace& ks = key_space(kind, n);
  if (coords.size() != ks.size()) throw ArgumentError("from_coordinates: length mismatch");
  SymTensor::Terms terms;
  for (std::size_t r = 0; r < ks.size(); ++r) {
    if (!coords[r].is_zero()) terms.emplace_hint(terms.end(), ks.key(r), coords[r]);
  }
  return SymTensor(kind, field, n, std::move(terms));
}

std::size_t left_ideal_rank(const SymTensor& f) {
  if (!(mul(f, f) == f)) throw ContractError("left_ideal_rank: argument is not idempotent");
  const KeySpace& ks = key_space(f.kind(), f.degree());
  Matrix rows;
  rows.reserve(ks.size());
  for (const auto& key : ks.keys()) {
    rows.push_back(coordinates(mul(SymTensor::monomial(f.kind(), f.field(), key), f)));
  }
  return rank(std::move(rows));
}

}  // namespace symidem
