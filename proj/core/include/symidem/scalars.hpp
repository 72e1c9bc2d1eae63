#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals
// a + b*sqrt(-1) with rational a, b.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace symidem {

/// Rational number in canonical form (reduced, positive denominator, 0 = 0/1).
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" (optional sign on p).
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  /// Always "p/q", lowest terms, leading '-' when negative.
  std::string to_string() const;

private:
  mpq_class value_{0};
};

/// C(n, k) as a rational; zero outside 0 <= k <= n.
Rational binomial(long n, long k);
Rational factorial(long n);
Rational pow(const Rational& base, unsigned exponent);

/// re + im*sqrt(-1). Both parts are canonical Rationals, equality is componentwise.
class GaussRational {
public:
  GaussRational() = default;
  GaussRational(const Rational& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(long re) : re_(re) {}             // NOLINT(google-explicit-constructor)
  GaussRational(int re) : re_(re) {}              // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  /// Parses the serialized form "p/q" or "p/q+r/s*i" (also accepts "-r/s*i").
  static GaussRational parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRational conj() const { return {re_, -im_}; }
  /// Field inverse; throws DivisionByZero on zero.
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& rhs);
  GaussRational& operator-=(const GaussRational& rhs);
  GaussRational& operator*=(const GaussRational& rhs);
  GaussRational& operator/=(const GaussRational& rhs) { return *this *= rhs.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "p/q" when real, otherwise "p/q+r/s*i" / "p/q-r/s*i".
  std::string to_string() const;

private:
  Rational re_;
  Rational im_;
};

inline GaussRational conj(const GaussRational& x) { return x.conj(); }

std::ostream& operator<<(std::ostream& os, const Rational& x);
std::ostream& operator<<(std::ostream& os, const GaussRational& x);

}  // namespace symidem
