#include "symidem/scalars.hpp"

#include <ostream>

#include "symidem/errors.hpp"

namespace symidem {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  mpz_class p, q;
  if (num.empty() || den.empty() || p.set_str(num, 10) != 0 || q.set_str(den, 10) != 0 ||
      den.front() == '-' || den.front() == '+') {
    throw ArgumentError("malformed rational: '" + std::string(text) + "'");
  }
  return {p, q};
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(out));
}

Rational factorial(long n) {
  if (n < 0) throw ArgumentError("factorial of a negative number");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(out));
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return {num, den};
}

GaussRational GaussRational::parse(std::string_view text) {
  if (text.empty()) throw ArgumentError("empty scalar string");
  if (text.back() != 'i') return GaussRational(Rational::parse(text));
  // Split "re(+|-)im*i" at the sign that starts the imaginary part.
  std::string_view body = text.substr(0, text.size() - 1);
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t pos = body.size(); pos-- > 1;) {
    if (body[pos] == '+' || body[pos] == '-') {
      split = pos;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return {Rational(0), Rational::parse(body.empty() ? "1" : body)};
  }
  Rational re = Rational::parse(body.substr(0, split));
  Rational im = Rational::parse(body.substr(split + 1));
  return {re, body[split] == '-' ? -im : im};
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussRational& GaussRational::operator+=(const GaussRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& rhs) {
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  const std::string sign = im_.sign() < 0 ? "-" : "+";
  const Rational mag = im_.sign() < 0 ? -im_ : im_;
  return re_.to_string() + sign + mag.to_string() + "*i";
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const GaussRational& x) { return os << x.to_string(); }

}  // namespace symidem
