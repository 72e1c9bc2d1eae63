#include <doctest.h>

#include "symidem/algebra.hpp"
#include "symidem/errors.hpp"
#include "symidem/idempotents.hpp"
#include "symidem/verify.hpp"

using namespace symidem;

namespace {
constexpr auto H = AlgebraKind::Quaternion;
constexpr auto O = AlgebraKind::Octonion;
constexpr auto Q = FieldTag::RationalReal;
constexpr auto C = FieldTag::GaussianComplex;

AlgebraElement e(AlgebraKind kind, std::size_t i, FieldTag f = Q) { return AlgebraElement::basis(kind, f, i); }
}  // namespace

TEST_CASE("octonion basis products") {
  CHECK(basis_mul(O, 1, 2) == BasisProduct{1, 3});
  CHECK(basis_mul(O, 4, 5) == BasisProduct{1, 1});
  for (std::size_t j = 0; j < 8; ++j) CHECK(basis_mul(O, 0, j) == BasisProduct{1, j});
  for (std::size_t i = 1; i < 8; ++i) CHECK(basis_mul(O, i, i) == BasisProduct{-1, 0});
  CHECK_THROWS_AS(basis_mul(H, 4, 0), ArgumentError);
  CHECK_THROWS_AS(basis_mul(AlgebraKind::Re1, 0, 2), ArgumentError);
}

TEST_CASE("a and its conjugate") {
  const auto a = a_element(C, H);
  const auto ac = ac_element(C, H);
  CHECK(mul(a, a) == a);
  CHECK(mul(ac, ac) == ac);
  CHECK(mul(a, ac).is_zero());
  CHECK(a + ac == AlgebraElement::one(H, C));
  CHECK(mul(a, e(H, 2, C)) == mul(e(H, 2, C), ac));
  CHECK(norm(a) == GaussRational());
  CHECK(mul(e(H, 3), e(H, 3)) == -AlgebraElement::one(H, Q));
}

TEST_CASE("norm is multiplicative") {
  for (auto kind : {AlgebraKind::Re1, H, O}) {
    for (std::size_t i = 0; i < dimension(kind); ++i) CHECK(norm(e(kind, i)) == GaussRational(1));
    Sampler s(42);
    for (int t = 0; t < 100; ++t) {
      const auto f = t % 2 ? C : Q;
      const auto x = s.element(kind, f), y = s.element(kind, f);
      CHECK(norm(mul(x, y)) == norm(x) * norm(y));
    }
  }
}

TEST_CASE("e-parts") {
  std::vector<GaussRational> c(4);
  c[2] = Rational(3, 5);
  c[3] = Rational(4, 5);
  const UnitImaginary u(AlgebraElement(H, Q, c));
  CHECK(epart(AlgebraElement::one(H, Q), u) == AlgebraElement::one(H, Q));
  CHECK(epart(e(H, 2), u) == GaussRational(Rational(3, 5)) * u.element());
  CHECK(epart(e(H, 1), u).is_zero());
  const UnitImaginary uc = u.with_field(C);
  CHECK(epart(a_element(C, H), uc) == GaussRational(Rational(1, 2)) * AlgebraElement::one(H, C));
  CHECK_THROWS_AS(UnitImaginary(e(H, 0)), ArgumentError);
  CHECK_THROWS_AS(UnitImaginary(GaussRational(Rational(2)) * e(H, 1)), ArgumentError);
}

TEST_CASE("embedding H into O") {
  CHECK(embed(e(H, 3), O) == e(O, 3));
  CHECK(embed(AlgebraElement::one(AlgebraKind::Re1, Q), O) == AlgebraElement::one(O, Q));
  Sampler s(3);
  for (int t = 0; t < 50; ++t) {
    const auto x = s.element(H, C), y = s.element(H, C);
    CHECK(embed(mul(x, y), O) == mul(embed(x, O), embed(y, O)));
  }
  CHECK_THROWS_AS(embed(e(O, 5), H), ArgumentError);
}

TEST_CASE("rational unit imaginary samples") {
  const auto hs = im1_rational_samples(H, 6, 1);
  bool found = false;
  for (const auto& u : hs) {
    CHECK(mul(u.element(), u.element()) == -AlgebraElement::one(H, Q));
    CHECK(norm(u.element()) == GaussRational(1));
    found = found || (u.element()[1] == GaussRational(Rational(3, 5)) && u.element()[2] == GaussRational(Rational(4, 5)));
  }
  CHECK(found);
  const auto os = im1_rational_samples(O, 3, 1);
  REQUIRE(os.size() == 3);
  CHECK(!(os[0].element() == os[1].element()));
  CHECK(!(os[1].element() == os[2].element()));
  for (const auto& u : os) CHECK(mul(u.element(), u.element()) == -AlgebraElement::one(O, Q));
}

TEST_CASE("algebra names") {
  CHECK(parse_kind("octonion") == O);
  CHECK(parse_field("gaussian") == C);
  CHECK(to_string(H) == "quaternion");
  CHECK_THROWS_AS(parse_kind("sedenion"), ArgumentError);
}
