#include "symidem/algebra.hpp"

#include <random>
#include <string>

#include "symidem/errors.hpp"

namespace symidem {

namespace {

// Row i, column j holds +-(k+1) for e_i * e_j = +-e_k.
constexpr std::array<std::int8_t, 64> kOctonionTable = {
    // e0
    +1, +2, +3, +4, +5, +6, +7, +8,
    // e1
    +2, -1, +4, -3, +6, -5, -8, +7,
    // e2
    +3, -4, -1, +2, +7, +8, -5, -6,
    // e3
    +4, +3, -2, -1, +8, -7, +6, -5,
    // e4
#ifdef SYMIDEM_MUTANT_TABLE
    +5, -6, -7, -8, -1, -2, +3, +4,
#else
    +5, -6, -7, -8, -1, +2, +3, +4,
#endif
    // e5
    +6, +5, -8, +7, -2, -1, -4, +3,
    // e6
    +7, +8, +5, -6, -3, +4, -1, -2,
    // e7
    +8, -7, +6, +5, -4, -3, +2, -1,
};

void require_same(const AlgebraElement& x, const AlgebraElement& y, const char* what) {
  if (x.kind() != y.kind() || x.field() != y.field()) {
    throw ArgumentError(std::string(what) + ": kind/field mismatch");
  }
}

}  // namespace

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Re1: return "re1";
    case AlgebraKind::Quaternion: return "quaternion";
    case AlgebraKind::Octonion: return "octonion";
  }
  return "?";
}

std::string_view to_string(FieldTag field) {
  return field == FieldTag::RationalReal ? "rational" : "gaussian";
}

AlgebraKind parse_kind(std::string_view text) {
  if (text == "re1") return AlgebraKind::Re1;
  if (text == "quaternion" || text == "h") return AlgebraKind::Quaternion;
  if (text == "octonion" || text == "o") return AlgebraKind::Octonion;
  throw ArgumentError("unknown algebra kind '" + std::string(text) + "'");
}

FieldTag parse_field(std::string_view text) {
  if (text == "rational") return FieldTag::RationalReal;
  if (text == "gaussian") return FieldTag::GaussianComplex;
  throw ArgumentError("unknown field '" + std::string(text) + "'");
}

BasisProduct octonion_basis_mul(std::size_t i, std::size_t j) noexcept {
  const int entry = kOctonionTable[i * 8 + j];
  return entry > 0 ? BasisProduct{+1, static_cast<std::size_t>(entry - 1)}
                   : BasisProduct{-1, static_cast<std::size_t>(-entry - 1)};
}

BasisProduct basis_mul(AlgebraKind kind, std::size_t i, std::size_t j) {
  const std::size_t d = dimension(kind);
  if (i >= d || j >= d) {
    throw ArgumentError("basis index out of range for " + std::string(to_string(kind)));
  }
  return octonion_basis_mul(i, j);
}

AlgebraElement::AlgebraElement(AlgebraKind kind, FieldTag field)
    : kind_(kind), field_(field), coords_(dimension(kind)) {}

AlgebraElement::AlgebraElement(AlgebraKind kind, FieldTag field, std::vector<GaussRational> coords)
    : kind_(kind), field_(field), coords_(std::move(coords)) {
  if (coords_.size() != dimension(kind)) {
    throw ArgumentError("algebra element needs exactly " + std::to_string(dimension(kind)) +
                        " coordinates");
  }
  if (field == FieldTag::RationalReal) {
    for (const auto& c : coords_) {
      if (!c.is_real()) throw ArgumentError("non-real coordinate in a rational element");
    }
  }
}

AlgebraElement AlgebraElement::basis(AlgebraKind kind, FieldTag field, std::size_t i) {
  if (i >= dimension(kind)) throw ArgumentError("basis index out of range");
  AlgebraElement out(kind, field);
  out.coords_[i] = 1;
  return out;
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

AlgebraElement AlgebraElement::with_field(FieldTag field) const {
  return AlgebraElement(kind_, field, coords_);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same(*this, rhs, "add");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same(*this, rhs, "sub");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const GaussRational& scalar) {
  if (field_ == FieldTag::RationalReal && !scalar.is_real()) {
    throw ArgumentError("complex scalar applied to a rational element");
  }
  for (auto& c : coords_) c *= scalar;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.kind_ == b.kind_ && a.field_ == b.field_ && a.coords_ == b.coords_;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y, "mul");
  AlgebraElement out(x.kind(), x.field());
  std::vector<GaussRational> coords(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.dim(); ++j) {
      if (y[j].is_zero()) continue;
      const auto [sign, k] = octonion_basis_mul(i, j);
      const GaussRational term = x[i] * y[j];
      if (sign > 0) {
        coords[k] += term;
      } else {
        coords[k] -= term;
      }
    }
  }
  return AlgebraElement(x.kind(), x.field(), std::move(coords));
}

GaussRational norm(const AlgebraElement& x) {
  GaussRational out;
  for (const auto& c : x.coords()) out += c * c;
  return out;
}

AlgebraElement conj(const AlgebraElement& x) {
  std::vector<GaussRational> coords;
  coords.reserve(x.dim());
  for (const auto& c : x.coords()) coords.push_back(c.conj());
  return AlgebraElement(x.kind(), x.field(), std::move(coords));
}

AlgebraElement embed(const AlgebraElement& x, AlgebraKind into) {
  if (dimension(into) < x.dim()) throw ArgumentError("embed: target algebra is smaller");
  std::vector<GaussRational> coords = x.coords();
  coords.resize(dimension(into));
  return AlgebraElement(into, x.field(), std::move(coords));
}

UnitImaginary::UnitImaginary(AlgebraElement element) : element_(std::move(element)) {
  if (!element_[0].is_zero()) throw ArgumentError("unit imaginary must have zero real part");
  const AlgebraElement square = mul(element_, element_);
  if (!(square == -AlgebraElement::one(element_.kind(), element_.field()))) {
    throw ArgumentError("unit imaginary must square to -1");
  }
}

AlgebraElement epart(const AlgebraElement& x, const UnitImaginary& e) {
  const AlgebraElement& u = e.element();
  require_same(x, u, "epart");
  AlgebraElement out = x - mul(mul(u, x), u);
  out *= Rational(1, 2);
  return out;
}

std::vector<UnitImaginary> im1_rational_samples(AlgebraKind kind, std::size_t count,
                                                std::uint64_t seed) {
  if (count == 0) throw ArgumentError("im1_rational_samples: count must be positive");
  const std::size_t d = dimension(kind);
  const FieldTag field = FieldTag::RationalReal;
  std::vector<UnitImaginary> out;
  out.reserve(count);

  if (kind == AlgebraKind::Re1) {
    // Im_1 of R[e1] is {e1, -e1}.
    for (std::size_t s = 0; s < count; ++s) {
      AlgebraElement e = AlgebraElement::basis(kind, field, 1);
      if (s % 2 == 1) e = -e;
      out.emplace_back(std::move(e));
    }
    return out;
  }

  struct Pattern {
    std::vector<long> numerators;
    long denominator;
    std::vector<std::size_t> slots;
  };
  std::vector<Pattern> fixed = {
      {{3, 4}, 5, {1, 2}},
      {{1, 2, 2}, 3, {1, 2, 3}},
      {{2, 3, 6}, 7, {1, 2, 3}},
  };
  if (kind == AlgebraKind::Octonion) {
    fixed[2].slots = {2, 5, 7};
    fixed.push_back({{1, 1, 1, 1}, 2, {4, 5, 6, 7}});
  }

  for (std::size_t s = 0; s < count && s < fixed.size(); ++s) {
    std::vector<GaussRational> coords(d);
    for (std::size_t t = 0; t < fixed[s].slots.size(); ++t) {
      coords[fixed[s].slots[t]] = Rational(fixed[s].numerators[t], fixed[s].denominator);
    }
    out.emplace_back(AlgebraElement(kind, field, std::move(coords)));
  }

  // Inverse stereographic projection of a random t in Q^(d-2) onto the unit
  // sphere of the d-1 imaginary coordinates: (2t, |t|^2 - 1) / (|t|^2 + 1).
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 4);
  while (out.size() < count) {
    std::vector<Rational> t(d - 2);
    Rational t2;
    for (auto& ti : t) {
      ti = Rational(num(rng), den(rng));
      t2 += ti * ti;
    }
    const Rational scale = (t2 + Rational(1)).inverse();
    std::vector<GaussRational> coords(d);
    for (std::size_t i = 0; i < t.size(); ++i) coords[i + 1] = Rational(2) * t[i] * scale;
    coords[d - 1] = (t2 - Rational(1)) * scale;
    out.emplace_back(AlgebraElement(kind, field, std::move(coords)));
  }
  return out;
}

}  // namespace symidem
