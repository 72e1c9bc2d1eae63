#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symidem/algebra.hpp"
#include "symidem/scalars.hpp"
#include "symidem/symtensor.hpp"

namespace symidem {

/// Diagonal element (1/d) sum_i e_i (x) e_i of Sym^2.
SymTensor triangle(AlgebraKind kind, FieldTag field);
/// (triangle (x) 1^{(x)(n-2)})^vee, n >= 2.
SymTensor triangle_n(AlgebraKind kind, FieldTag field, std::size_t n);

struct BetaValue {
  std::size_t n;
  std::size_t m;
  std::size_t d;
  Rational value;
};

/// 2(n-m)(2m+d-2) / (d n (n-1)) for n >= 2 and ceil(n/2) <= m <= n.
BetaValue beta(std::size_t n, std::size_t m, std::size_t d);

/// Throws ArgumentError unless n >= 1 and ceil(n/2) <= m <= n.
void check_partition_index(std::size_t n, std::size_t m, const char* name = "m");

// Three independent routes to the central idempotent e^{(n)}_m.
SymTensor central_idempotent_product(std::size_t n, std::size_t m, AlgebraKind kind,
                                     FieldTag field = FieldTag::RationalReal);
SymTensor central_idempotent_recursive(std::size_t n, std::size_t m, AlgebraKind kind,
                                       FieldTag field = FieldTag::RationalReal);
/// Quaternion and octonion only, ceil(n/2) <= m <= n-1.
SymTensor central_idempotent_closed(std::size_t n, std::size_t m, AlgebraKind kind,
                                    FieldTag field = FieldTag::RationalReal);

/// Memoized e^{(n)}_m (recursive route); the workhorse for the set builders.
const SymTensor& central_idempotent(std::size_t n, std::size_t m, AlgebraKind kind,
                                    FieldTag field);

/// a = (1 + sqrt(-1) e_1)/2 and its conjugate, in C[e_1] unless another kind is asked for.
AlgebraElement a_element(FieldTag field = FieldTag::GaussianComplex,
                         AlgebraKind kind = AlgebraKind::Re1);
AlgebraElement ac_element(FieldTag field = FieldTag::GaussianComplex,
                          AlgebraKind kind = AlgebraKind::Re1);
/// (1 (x) 1 + e_1 (x) e_1)/2.
SymTensor square_element(AlgebraKind kind = AlgebraKind::Quaternion,
                         FieldTag field = FieldTag::RationalReal);

/// Coefficient of (x+y)^{n-2k}(xy)^k in x^n + y^n: (-1)^k n/(n-k) C(n-k, k).
Rational waring_coeff(std::size_t n, std::size_t k);

enum class Family {
  Thm1a,
  Thm1b,
  Thm1cSquare,
  Thm1cDelta,
  Thm3a,
  Thm3b,
  Thm3cSquare,
  Thm3cDelta,
  Central,
  CyclicPlane,
};

std::string to_string(Family family);
Family parse_family(const std::string& text);

struct IdempotentLabel {
  Family family;
  std::size_t n;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> m;
  std::optional<std::size_t> k;
  std::optional<int> delta;

  friend bool operator==(const IdempotentLabel&, const IdempotentLabel&) = default;
};

struct IdempotentSet {
  std::vector<IdempotentLabel> labels;
  std::vector<SymTensor> tensors;
  SymTensor expected_unit;
  std::size_t expected_count;
};

// Closed-form cardinalities.
std::size_t theorem1_count(std::size_t n, std::size_t ell, FieldTag field);
std::size_t theorem3_count(std::size_t n, std::size_t m, FieldTag field);
std::size_t corollary2_count(std::size_t n, FieldTag field);
std::size_t corollary4_count(std::size_t n, FieldTag field);

/// Gaussian field: part (a). Rational field: part (b) for odd n, (c) for even n.
IdempotentSet theorem1_set(std::size_t n, std::size_t ell, FieldTag field);
/// theorem1_set elements for ell = ceil(n/2)..m, embedded in Sym^n O and multiplied by e^{(n)}_{m,O}.
IdempotentSet theorem3_set(std::size_t n, std::size_t m, FieldTag field);
IdempotentSet corollary2_set(std::size_t n, FieldTag field);
IdempotentSet corollary4_set(std::size_t n, FieldTag field);

/// {e^{(n)}_m : ceil(n/2) <= m <= n}, unit 1^{(x)n}.
IdempotentSet central_set(std::size_t n, AlgebraKind kind, FieldTag field);
/// C(n,k)(a^{(x)k} (x) (a^c)^{(x)(n-k)})^vee for k = 0..n in Sym^n C[e_1].
IdempotentSet cyclic_plane_set(std::size_t n);

// Individual elements, exposed for cross-checks.

/// C(n,k)(a^{(x)k} (x) (a^c)^{(x)(n-k)})^vee in Sym^n H over the Gaussian field.
SymTensor binomial_a_element(std::size_t n, std::size_t k, AlgebraKind kind = AlgebraKind::Quaternion);

/// Summation limit for the even real family.
enum class DeltaSumLimit {
  Support,       // every i with C(n/2-k-i, i) != 0
  HalfDifference,  // floor(n/4 - k/2)
  QuarterMinusHalfK,  // n/4 - floor(k/2)
};

SymTensor theorem1_odd_element(std::size_t n, std::size_t ell, std::size_t k);
SymTensor theorem1_square_element(std::size_t n, std::size_t ell);
SymTensor theorem1_delta_element(std::size_t n, std::size_t ell, std::size_t k, int delta,
                                 DeltaSumLimit limit = DeltaSumLimit::Support);
/// f + conj(f) for f = C(n,k)(a^{(x)k}(x)(a^c)^{(x)(n-k)})^vee e_ell, optionally times
/// (1^{(x)n} + delta e_2^{(x)n})/2; returned over the rational field.
SymTensor conjugate_pair_element(std::size_t n, std::size_t ell, std::size_t k,
                                 std::optional<int> delta = std::nullopt);

}  // namespace symidem
