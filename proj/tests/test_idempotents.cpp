#include <doctest.h>

#include <fstream>

#include "symidem/errors.hpp"
#include "symidem/idempotents.hpp"
#include "symidem/json_io.hpp"
#include "symidem/verify.hpp"

using namespace symidem;

namespace {
constexpr auto R1 = AlgebraKind::Re1;
constexpr auto H = AlgebraKind::Quaternion;
constexpr auto O = AlgebraKind::Octonion;
constexpr auto Q = FieldTag::RationalReal;
constexpr auto C = FieldTag::GaussianComplex;

GaussRational q(long a, long b = 1) { return Rational(a, b); }
AlgebraElement e(AlgebraKind kind, std::size_t i, FieldTag f = Q) { return AlgebraElement::basis(kind, f, i); }

SymTensor scaled(const GaussRational& c, SymTensor t) { return c * std::move(t); }

bool complete(const IdempotentSet& set) { return check_set(set).passed(); }
}  // namespace

TEST_CASE("diagonal elements") {
  SymTensor expected(H, Q, 2);
  for (std::size_t i = 0; i < 4; ++i) expected += scaled(q(1, 4), tensor_power(e(H, i), 2));
  CHECK(triangle(H, Q) == expected);
  const auto sq = scaled(q(1, 2), tensor_power(e(R1, 0), 2) + tensor_power(e(R1, 1), 2));
  CHECK(triangle(R1, Q) == sq);
  CHECK(square_element(R1, Q) == sq);
  for (auto k : {R1, H, O}) CHECK(mul(triangle(k, Q), triangle(k, Q)) == triangle(k, Q));
  CHECK(triangle_n(H, Q, 2) == triangle(H, Q));
  CHECK(mul(triangle_n(O, Q, 3), central_idempotent(3, 3, O, Q)).is_zero());
}

TEST_CASE("beta values") {
  CHECK(beta(2, 1, 4).value == Rational(1));
  CHECK(beta(2, 2, 4).value == Rational(0));
  for (long d : {2, 4, 8}) CHECK(beta(3, 2, d).value == Rational(d + 2, 3 * d));
  CHECK_THROWS_AS(beta(3, 1, 4), ArgumentError);
  CHECK_THROWS_AS(beta(3, 4, 4), ArgumentError);
}

TEST_CASE("low-degree central idempotents") {
  const auto tri = triangle(H, Q);
  CHECK(central_idempotent_product(2, 1, H) == tri);
  CHECK(central_idempotent_product(2, 2, H) == SymTensor::unit(H, Q, 2) - tri);
  for (auto k : {H, O}) {
    const long d = static_cast<long>(dimension(k));
    const auto t31 = graft(triangle(k, Q), SymTensor::unit(k, Q, 1));
    CHECK(central_idempotent_product(3, 3, k) == SymTensor::unit(k, Q, 3) - scaled(q(3 * d, d + 2), t31));
    CHECK(central_idempotent_recursive(3, 2, k) == scaled(q(3 * d, d + 2), t31));
  }
  CHECK(central_idempotent_recursive(3, 2, H) == scaled(q(2), graft(tri, SymTensor::unit(H, Q, 1))));
  CHECK(central_idempotent_recursive(2, 1, H) == tri);
  CHECK(central_idempotent_recursive(4, 3, H) == central_idempotent_product(4, 3, H));
  CHECK(central_idempotent_closed(2, 1, H) == tri);
  CHECK(central_idempotent_closed(3, 2, H) == scaled(q(2), graft(tri, SymTensor::unit(H, Q, 1))));
  CHECK_THROWS_AS(central_idempotent_closed(2, 1, R1), ArgumentError);
  CHECK_THROWS_AS(central_idempotent_closed(3, 3, H), ArgumentError);
}

TEST_CASE("closed form for octonions at n=4, m=2") {
  const auto& e42 = central_idempotent(4, 2, O, Q);
  CHECK(mul(e42, e42) == e42);
  // 2^2 * (1*2*3)/(3*4*5) * C(4,2) = 12/5
  CHECK(central_idempotent_closed(4, 2, O) == scaled(q(12, 5), graft_power(triangle(O, Q), 2)));
  CHECK(central_idempotent_product(4, 2, O) == e42);
  Sampler s(21);
  for (int t = 0; t < 5; ++t) {
    const auto x = s.tensor(O, Q, 4);
    CHECK(mul(e42, x) == mul(x, e42));
  }
}

TEST_CASE("a, its conjugate and the square element") {
  const auto a = a_element(C, H), ac = ac_element(C, H);
  CHECK(a + ac == AlgebraElement::one(H, C));
  const auto sq = square_element(H, C);
  CHECK(mul(sq, sq) == sq);
  CHECK(mul(tensor_power(a, 2), sq).is_zero());
  CHECK(sq == scaled(q(2), graft(SymTensor::from_element(a), SymTensor::from_element(ac))));
}

TEST_CASE("Waring coefficients") {
  CHECK(waring_coeff(2, 0) == Rational(1));
  CHECK(waring_coeff(2, 1) == Rational(-2));
  CHECK(waring_coeff(3, 1) == Rational(-3));
  CHECK(waring_coeff(4, 2) == Rational(2));
  CHECK(waring_coeff(4, 1) == Rational(-4));
  CHECK(waring_coeff(5, 2) == Rational(5));
}

TEST_CASE("theorem1_set families") {
  const auto s11 = theorem1_set(1, 1, C);
  REQUIRE(s11.tensors.size() == 2);
  CHECK(s11.tensors[0] == SymTensor::from_element(ac_element(C, H)));
  CHECK(s11.tensors[1] == SymTensor::from_element(a_element(C, H)));
  const auto s21 = theorem1_set(2, 1, Q);
  REQUIRE(s21.tensors.size() == 1);
  CHECK(s21.tensors[0] == triangle(H, Q));
  const auto s22 = theorem1_set(2, 2, Q);
  CHECK(s22.tensors.size() == 3);
  CHECK(complete(s22));
  CHECK(theorem1_set(3, 2, C).tensors.size() == 2);
  CHECK(complete(theorem1_set(3, 2, C)));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t l = (n + 1) / 2; l <= n; ++l) {
      for (auto f : {Q, C}) {
        const auto set = theorem1_set(n, l, f);
        CHECK(set.tensors.size() == theorem1_count(n, l, f));
        CHECK(complete(set));
      }
    }
  }
  CHECK_THROWS_WITH_AS(theorem1_set(3, 1, C), "ell must lie in [ceil(n/2), n] = [2, 3], got 1", ArgumentError);
  CHECK_THROWS_AS(theorem1_set(0, 0, C), ArgumentError);
}

TEST_CASE("theorem3_set families") {
  const auto tau = theorem3_set(2, 2, Q);
  CHECK(tau.tensors.size() == 4);
  CHECK(complete(tau));
  CHECK(tau.expected_unit == central_idempotent(2, 2, O, Q));
  CHECK(theorem3_set(2, 1, Q).tensors.size() == 1);
  CHECK(theorem3_set(3, 2, C).tensors.size() == 2);
  CHECK(complete(theorem3_set(3, 2, C)));
}

TEST_CASE("corollary unions") {
  CHECK(corollary2_set(2, C).tensors.size() == 4);
  CHECK(corollary4_set(2, C).tensors.size() == 5);
  CHECK(corollary2_set(3, Q).tensors.size() == 3);
  CHECK(corollary2_count(5, C) == 12);
  CHECK(corollary4_count(3, C) == 8);
  CHECK(complete(corollary2_set(3, Q)));
  CHECK(complete(corollary4_set(2, C)));
}

TEST_CASE("central and cyclic-plane families") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(complete(central_set(n, H, Q)));
    const auto cp = cyclic_plane_set(n);
    CHECK(cp.tensors.size() == n + 1);
    CHECK(complete(cp));
  }
}

TEST_CASE("delta-element summation limits agree") {
  for (std::size_t n : {2, 4, 6}) {
    for (std::size_t l = n / 2; l <= n; ++l) {
      for (std::size_t k = n - l; k + 1 <= n / 2; ++k) {
        for (int d : {-1, 1}) {
          const auto s = theorem1_delta_element(n, l, k, d, DeltaSumLimit::Support);
          CHECK(theorem1_delta_element(n, l, k, d, DeltaSumLimit::HalfDifference) == s);
          CHECK(theorem1_delta_element(n, l, k, d, DeltaSumLimit::QuarterMinusHalfK) == s);
        }
      }
    }
  }
}

TEST_CASE("agreement with the dense reference values") {
  std::ifstream in(SYMIDEM_ORACLE_FILE);
  REQUIRE(in.good());
  const Json oracle = Json::parse(in);
  for (const auto& row : oracle["central"]) {
    const auto kind = parse_kind(row["kind"].get<std::string>());
    const auto n = row["n"].get<std::size_t>(), m = row["m"].get<std::size_t>();
    CAPTURE(n);
    CAPTURE(m);
    CHECK(central_idempotent(n, m, kind, Q) == tensor_from_json(row["tensor"]));
  }
  for (const auto& row : oracle["triangle_n"]) {
    const auto kind = parse_kind(row["kind"].get<std::string>());
    CHECK(triangle_n(kind, Q, row["n"].get<std::size_t>()) == tensor_from_json(row["tensor"]));
  }
  for (const auto& row : oracle["component_ranks"]) {
    const auto& f = central_idempotent(row["n"].get<std::size_t>(), row["m"].get<std::size_t>(), H, Q);
    CHECK(left_ideal_rank(f) == row["rank"].get<std::size_t>());
  }
  for (const auto& row : oracle["thm1_complex"]) {
    const auto n = row["n"].get<std::size_t>(), l = row["ell"].get<std::size_t>(), k = row["k"].get<std::size_t>();
    CAPTURE(n);
    CAPTURE(l);
    CAPTURE(k);
    const auto set = theorem1_set(n, l, C);
    const SymTensor* found = nullptr;
    for (std::size_t i = 0; i < set.labels.size(); ++i) {
      if (set.labels[i].k == k) found = &set.tensors[i];
    }
    REQUIRE(found != nullptr);
    CHECK(*found == tensor_from_json(row["tensor"]));
    CHECK(left_ideal_rank(*found) == row["rank"].get<std::size_t>());
    CHECK(row["rank"].get<std::size_t>() == 2 * l - n + 1);
  }
  const auto tau = theorem3_set(2, 2, Q);
  REQUIRE(oracle["tau"].size() == 4);
  for (const auto& t : oracle["tau"]) {
    const auto expected = tensor_from_json(t);
    bool present = false;
    for (const auto& f : tau.tensors) present = present || f == expected;
    CHECK(present);
  }
}
