#pragma once

// The composition algebras R[e1] (d=2), H (d=4) and O (d=8) over Q or Q[sqrt(-1)],
// given by one octonion structure-constant table restricted to the first d basis
// elements.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "symidem/scalars.hpp"

namespace symidem {

enum class AlgebraKind : std::uint8_t { Re1, Quaternion, Octonion };
enum class FieldTag : std::uint8_t { RationalReal, GaussianComplex };

constexpr std::size_t dimension(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Re1: return 2;
    case AlgebraKind::Quaternion: return 4;
    case AlgebraKind::Octonion: return 8;
  }
  return 0;
}

std::string_view to_string(AlgebraKind kind);
std::string_view to_string(FieldTag field);
AlgebraKind parse_kind(std::string_view text);
FieldTag parse_field(std::string_view text);

/// The field over which both operands can be multiplied: complex wins.
constexpr FieldTag join(FieldTag a, FieldTag b) {
  return a == FieldTag::GaussianComplex || b == FieldTag::GaussianComplex
             ? FieldTag::GaussianComplex
             : FieldTag::RationalReal;
}

struct BasisProduct {
  int sign;         // +1 or -1
  std::size_t index;
  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

/// e_i * e_j = sign * e_k. Throws ArgumentError if i or j is not below dim(kind).
BasisProduct basis_mul(AlgebraKind kind, std::size_t i, std::size_t j);

/// Unchecked octonion table lookup; i, j < 8.
BasisProduct octonion_basis_mul(std::size_t i, std::size_t j) noexcept;

class AlgebraElement {
public:
  AlgebraElement(AlgebraKind kind, FieldTag field);  // zero
  AlgebraElement(AlgebraKind kind, FieldTag field, std::vector<GaussRational> coords);

  static AlgebraElement basis(AlgebraKind kind, FieldTag field, std::size_t i);
  static AlgebraElement one(AlgebraKind kind, FieldTag field) { return basis(kind, field, 0); }

  AlgebraKind kind() const { return kind_; }
  FieldTag field() const { return field_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<GaussRational>& coords() const { return coords_; }
  const GaussRational& operator[](std::size_t i) const { return coords_.at(i); }

  bool is_zero() const;
  /// Same coordinates over the other field; demoting a non-real element throws.
  AlgebraElement with_field(FieldTag field) const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const GaussRational& scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const GaussRational& s, AlgebraElement a) { return a *= s; }
  AlgebraElement operator-() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
  AlgebraKind kind_;
  FieldTag field_;
  std::vector<GaussRational> coords_;
};

/// Bilinear product. Kinds and fields must match.
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);

/// N(x) = sum of squared coordinates (no conjugation of the scalars).
GaussRational norm(const AlgebraElement& x);

/// Coordinatewise complex conjugation of the scalars.
AlgebraElement conj(const AlgebraElement& x);

/// Copies coordinates into a larger algebra of the tower R[e1] < H < O.
AlgebraElement embed(const AlgebraElement& x, AlgebraKind into);

/// A purely imaginary element e with e*e = -1, checked on construction.
class UnitImaginary {
public:
  explicit UnitImaginary(AlgebraElement element);
  const AlgebraElement& element() const { return element_; }
  AlgebraKind kind() const { return element_.kind(); }
  UnitImaginary with_field(FieldTag field) const { return UnitImaginary(element_.with_field(field)); }

private:
  AlgebraElement element_;
};

/// x_e = (x - e x e) / 2, which lies in span{1, e}.
AlgebraElement epart(const AlgebraElement& x, const UnitImaginary& e);

/// Deterministic rational points of Im_1 built from Pythagorean tuples
/// ((3,4)/5, (1,2,2)/3, (2,3,6)/7 first, then inverse stereographic images of
/// seeded random rationals).
std::vector<UnitImaginary> im1_rational_samples(AlgebraKind kind, std::size_t count,
                                                std::uint64_t seed = 0xC0FFEE);

}  // namespace symidem
