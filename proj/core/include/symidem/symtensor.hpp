#pragma once

// Sparse exact elements of Sym^n C_F.
//
// Storage convention: the value at a sorted key is the plain-basis coefficient
// shared by every arrangement of that key. A symmetric tensor is therefore
// sum_K c_K * (sum over distinct arrangements of K), and symmetrizing a single
// monomial with key K contributes weight(K) = prod(mu_j!)/n! at K.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "symidem/algebra.hpp"
#include "symidem/multi_index.hpp"
#include "symidem/scalars.hpp"

namespace symidem {

inline constexpr std::size_t kDefaultDenseBound = 4096;

/// One unsymmetrized monomial coeff * e_{m1} (x) ... (x) e_{mn}.
struct PlainTerm {
  std::vector<std::uint8_t> monomial;
  GaussRational coeff;
};

class SymTensor {
public:
  using Terms = std::map<MultiIndex, GaussRational>;

  SymTensor(AlgebraKind kind, FieldTag field, std::size_t degree);  // zero
  /// Drops zero coefficients; validates every key against (kind, degree) and
  /// the field (no imaginary parts over RationalReal).
  SymTensor(AlgebraKind kind, FieldTag field, std::size_t degree, Terms terms);

  static SymTensor unit(AlgebraKind kind, FieldTag field, std::size_t n);
  static SymTensor scalar(AlgebraKind kind, FieldTag field, const GaussRational& value);
  /// Coefficient 1 at a single key.
  static SymTensor monomial(AlgebraKind kind, FieldTag field, const MultiIndex& key);
  /// An algebra element viewed as a degree-1 tensor.
  static SymTensor from_element(const AlgebraElement& x);

  AlgebraKind kind() const { return kind_; }
  FieldTag field() const { return field_; }
  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  GaussRational coeff(const MultiIndex& key) const;

  SymTensor with_field(FieldTag field) const;

  SymTensor& operator+=(const SymTensor& rhs);
  SymTensor& operator-=(const SymTensor& rhs);
  SymTensor& operator*=(const GaussRational& scalar);

  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(const GaussRational& s, SymTensor a) { return a *= s; }
  SymTensor operator-() const;

  friend bool operator==(const SymTensor& a, const SymTensor& b) = default;

private:
  void check_same(const SymTensor& rhs, const char* what) const;

  AlgebraKind kind_;
  FieldTag field_;
  std::size_t degree_;
  Terms terms_;
};

/// (sum of terms)^vee. Every monomial must have length n.
SymTensor symmetrize(std::span<const PlainTerm> terms, AlgebraKind kind, FieldTag field,
                     std::size_t n);

/// Plain expansion: one PlainTerm per arrangement of every stored key.
std::vector<PlainTerm> plain_terms(const SymTensor& x);

/// Product in Sym^n C_F, x*y = sum_I c_I A(I) (e_I * y)^vee.
SymTensor mul(const SymTensor& x, const SymTensor& y);

/// Independent product: both operands expanded to all d^n tuple coordinates and
/// multiplied tuple by tuple. Throws ResourceError when d^n > dense_bound.
SymTensor dense_mul_oracle(const SymTensor& x, const SymTensor& y,
                           std::size_t dense_bound = kDefaultDenseBound);

/// (x (x) y)^vee, of degree deg x + deg y.
SymTensor graft(const SymTensor& x, const SymTensor& y);
/// (t (x) ... (x) t)^vee with `power` factors; power 0 gives the scalar 1.
SymTensor graft_power(const SymTensor& t, std::size_t power);

/// (x)_e = sum over monomials of prod_p (e_{i_p})_e, evaluated in F[e].
AlgebraElement epart_n(const SymTensor& x, const UnitImaginary& e);

SymTensor embed_sym(const SymTensor& x, AlgebraKind into);
SymTensor tensor_power(const AlgebraElement& x, std::size_t n);
SymTensor conj_sym(const SymTensor& x);

/// Coordinates in key_space(kind, degree) order.
std::vector<GaussRational> coordinates(const SymTensor& x);
SymTensor from_coordinates(AlgebraKind kind, FieldTag field, std::size_t n,
                           std::span<const GaussRational> coords);

/// Dimension of Sym^n C_F * f, spanned by b*f over the monomial basis b.
/// Throws ContractError unless f*f == f.
std::size_t left_ideal_rank(const SymTensor& f);

}  // namespace symidem
