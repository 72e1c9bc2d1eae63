#include "symidem/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "symidem/errors.hpp"
#include "symidem/key_space.hpp"
#include "symidem/linalg.hpp"

namespace symidem {

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
  std::string detail;
  Json witness;
};

[[noreturn]] void fail(std::string detail, Json witness) {
  if (witness.is_null()) witness = Json::object();
  throw Failure{std::move(detail), std::move(witness)};
}

template <typename Body>
CheckResult run_check(std::string id, Body&& body) {
  CheckResult result;
  result.check_id = std::move(id);
  const auto start = Clock::now();
  try {
    body(result);
  } catch (const Failure& f) {
    result.status = CheckStatus::Failed;
    result.detail = f.detail;
    result.witnesses = f.witness;
  } catch (const ResourceError& e) {
    result.status = CheckStatus::Skipped;
    result.detail = e.what();
  } catch (const std::exception& e) {
    result.status = CheckStatus::Failed;
    result.detail = std::string("unexpected exception: ") + e.what();
    result.witnesses = {{"exception", e.what()}};
  }
  result.elapsed = Clock::now() - start;
  return result;
}

std::size_t dense_size(AlgebraKind kind, std::size_t n, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t p = 0; p < n && total <= cap; ++p) total *= dimension(kind);
  return total;
}

void require_dense(AlgebraKind kind, std::size_t n, std::size_t bound) {
  if (dense_size(kind, n, bound) > bound) {
    throw ResourceError(std::string(to_string(kind)) + " degree " + std::to_string(n) +
                        " exceeds the dense bound " + std::to_string(bound));
  }
}

SymTensor product(const SymTensor& x, const SymTensor& y, const VerifyOptions& opts) {
  SymTensor r = mul(x, y);
  if (opts.audit != nullptr) {
    if (dense_size(x.kind(), x.degree(), opts.dense_bound) <= opts.dense_bound) {
      SymTensor o = dense_mul_oracle(x, y, opts.dense_bound);
      ++opts.audit->checked;
      if (!(o == r)) {
        fail("sparse product disagrees with the dense oracle",
             {{"x", to_json(x)}, {"y", to_json(y)}, {"sparse", to_json(r)}, {"dense", to_json(o)}});
      }
    } else {
      ++opts.audit->beyond_bound;
    }
  }
  return r;
}

void expect_equal(const SymTensor& actual, const SymTensor& expected, const std::string& what,
                  Json context = Json::object()) {
  if (!(actual == expected)) {
    context["actual"] = to_json(actual);
    context["expected"] = to_json(expected);
    fail(what, std::move(context));
  }
}

constexpr std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

std::string kind_tag(AlgebraKind kind) { return std::string(to_string(kind)); }

// Independent transcription of the octonion table, row e_i, column e_j.
constexpr const char* kGoldenRows[8] = {
    "e0 e1 e2 e3 e4 e5 e6 e7",        "e1 -e0 e3 -e2 e5 -e4 -e7 e6",
    "e2 -e3 -e0 e1 e6 e7 -e4 -e5",    "e3 e2 -e1 -e0 e7 -e6 e5 -e4",
    "e4 -e5 -e6 -e7 -e0 e1 e2 e3",    "e5 e4 -e7 e6 -e1 -e0 -e3 e2",
    "e6 e7 e4 -e5 -e2 e3 -e0 -e1",    "e7 -e6 e5 e4 -e3 -e2 e1 -e0",
};

BasisProduct golden(std::size_t i, std::size_t j) {
  std::istringstream row(kGoldenRows[i]);
  std::string token;
  for (std::size_t c = 0; c <= j; ++c) row >> token;
  const bool negative = token[0] == '-';
  return {negative ? -1 : 1, static_cast<std::size_t>(token[negative ? 2 : 1] - '0')};
}

Json basis_product_json(const BasisProduct& p) {
  return (p.sign < 0 ? "-e" : "e") + std::to_string(p.index);
}

Matrix ideal_rows(const SymTensor& f, const VerifyOptions& opts) {
  Matrix rows;
  for (const auto& key : key_space(f.kind(), f.degree()).keys()) {
    rows.push_back(coordinates(product(SymTensor::monomial(f.kind(), f.field(), key), f, opts)));
  }
  return rows;
}

std::size_t checked_ideal_rank(const SymTensor& f, const VerifyOptions& opts) {
  if (!(product(f, f, opts) == f)) fail("not idempotent", {{"f", to_json(f)}});
  return rank(ideal_rows(f, opts));
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Passed: return "passed";
    case CheckStatus::Failed: return "failed";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

ComponentDescriptor ComponentDescriptor::of(std::size_t n, std::size_t ell, FieldTag field) {
  theorem1_count(n, ell, field);  // range check
  const std::size_t s = 2 * ell - n + 1;
  if (field == FieldTag::GaussianComplex || n % 2 == 0) return {n, ell, field, s, s * s, s};
  // M_{s/2}(H): real dimension 4 (s/2)^2, minimal left ideal H^{s/2}.
  return {n, ell, field, s / 2, s * s, 2 * s};
}

GaussRational Sampler::scalar(FieldTag field) {
  auto component = [this] {
    const long num = static_cast<long>(below(7)) - 3;
    const long den = static_cast<long>(below(3)) + 1;
    return Rational(num, den);
  };
  Rational re = component();
  if (field == FieldTag::RationalReal) return re;
  return {re, component()};
}

AlgebraElement Sampler::element(AlgebraKind kind, FieldTag field) {
  std::vector<GaussRational> coords(dimension(kind));
  for (auto& c : coords) c = scalar(field);
  return AlgebraElement(kind, field, std::move(coords));
}

SymTensor Sampler::tensor(AlgebraKind kind, FieldTag field, std::size_t n, std::size_t terms) {
  const KeySpace& ks = key_space(kind, n);
  SymTensor::Terms out;
  for (std::size_t t = 0; t < terms; ++t) {
    GaussRational c = scalar(field);
    if (c.is_zero()) c = Rational(1);
    out[ks.key(below(ks.size()))] += c;
  }
  return SymTensor(kind, field, n, std::move(out));
}

// ---------------------------------------------------------------- algebra

CheckResult check_table_fidelity() {
  return run_check("table.octonion", [](CheckResult&) {
    Json mismatches = Json::array();
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        const auto actual = basis_mul(AlgebraKind::Octonion, i, j);
        const auto expected = golden(i, j);
        if (!(actual == expected)) {
          mismatches.push_back({{"i", i}, {"j", j}, {"expected", basis_product_json(expected)},
                                {"actual", basis_product_json(actual)}});
        }
        if (i < 4 && j < 4 && !(basis_mul(AlgebraKind::Quaternion, i, j) == actual)) {
          mismatches.push_back({{"i", i}, {"j", j}, {"restriction", "quaternion"}});
        }
        if (i < 2 && j < 2 && !(basis_mul(AlgebraKind::Re1, i, j) == actual)) {
          mismatches.push_back({{"i", i}, {"j", j}, {"restriction", "re1"}});
        }
        if (i >= 1 && j >= 1 && i != j) {
          const auto swapped = basis_mul(AlgebraKind::Octonion, j, i);
          if (swapped.index != actual.index || swapped.sign != -actual.sign) {
            mismatches.push_back({{"i", i}, {"j", j}, {"law", "anticommutativity"}});
          }
        }
      }
    }
    if (!mismatches.empty()) fail("octonion table deviates from the reference", {{"entries", mismatches}});
  });
}

CheckResult check_quaternion_relations() {
  return run_check("table.quaternion-relations", [](CheckResult&) {
    const auto h = AlgebraKind::Quaternion;
    struct Rel {
      std::size_t i, j;
      BasisProduct p;
    };
    const Rel rels[] = {{1, 2, {1, 3}},  {2, 1, {-1, 3}}, {2, 3, {1, 1}},  {3, 2, {-1, 1}},
                        {3, 1, {1, 2}},  {1, 3, {-1, 2}}, {1, 1, {-1, 0}}, {2, 2, {-1, 0}},
                        {3, 3, {-1, 0}}};
    for (const auto& r : rels) {
      if (!(basis_mul(h, r.i, r.j) == r.p)) {
        fail("quaternion relation violated",
             {{"i", r.i}, {"j", r.j}, {"expected", basis_product_json(r.p)},
              {"actual", basis_product_json(basis_mul(h, r.i, r.j))}});
      }
    }
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
          const auto ij = basis_mul(h, i, j);
          const auto left = basis_mul(h, ij.index, k);
          const auto jk = basis_mul(h, j, k);
          const auto right = basis_mul(h, i, jk.index);
          if (left.index != right.index || ij.sign * left.sign != jk.sign * right.sign) {
            fail("quaternion basis triple is not associative", {{"i", i}, {"j", j}, {"k", k}});
          }
        }
      }
    }
  });
}

CheckResult check_composition_law(AlgebraKind kind, const VerifyOptions& opts) {
  return run_check("algebra.composition-law." + kind_tag(kind), [&](CheckResult&) {
    const std::size_t d = dimension(kind);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const auto x = AlgebraElement::basis(kind, FieldTag::RationalReal, i);
        const auto y = AlgebraElement::basis(kind, FieldTag::RationalReal, j);
        if (!(norm(mul(x, y)) == GaussRational(1))) fail("N(e_i e_j) != 1", {{"i", i}, {"j", j}});
      }
    }
    Sampler s(opts.seed);
    for (std::size_t t = 0; t < opts.samples; ++t) {
      const FieldTag f = t % 2 == 0 ? FieldTag::RationalReal : FieldTag::GaussianComplex;
      const auto x = s.element(kind, f);
      const auto y = s.element(kind, f);
      if (!(norm(mul(x, y)) == norm(x) * norm(y))) {
        fail("N(xy) != N(x)N(y)", {{"x", to_json(x)}, {"y", to_json(y)}});
      }
    }
  });
}

CheckResult check_alternativity(const VerifyOptions& opts) {
  return run_check("algebra.octonion-laws", [&](CheckResult&) {
    const auto o = AlgebraKind::Octonion;
    Sampler s(opts.seed);
    for (std::size_t t = 0; t < opts.samples; ++t) {
      const FieldTag f = t % 2 == 0 ? FieldTag::RationalReal : FieldTag::GaussianComplex;
      const auto x = s.element(o, f);
      const auto y = s.element(o, f);
      if (!(mul(mul(x, x), y) == mul(x, mul(x, y))) || !(mul(mul(y, x), x) == mul(y, mul(x, x)))) {
        fail("alternative law violated", {{"x", to_json(x)}, {"y", to_json(y)}});
      }
      const auto p = s.element(AlgebraKind::Quaternion, f);
      const auto q = s.element(AlgebraKind::Quaternion, f);
      if (!(embed(mul(p, q), o) == mul(embed(p, o), embed(q, o)))) {
        fail("embedding H -> O is not multiplicative", {{"x", to_json(p)}, {"y", to_json(q)}});
      }
    }
  });
}

CheckResult check_epart(AlgebraKind kind, const VerifyOptions& opts) {
  return run_check("algebra.epart." + kind_tag(kind), [&](CheckResult&) {
    const auto real = FieldTag::RationalReal;
    const auto samples = im1_rational_samples(kind, 8, opts.seed);
    const auto one = AlgebraElement::one(kind, real);
    Sampler s(opts.seed);
    for (const auto& e : samples) {
      const auto& ev = e.element();
      if (!(mul(ev, ev) == -one) || !(norm(ev) == GaussRational(1))) {
        fail("sample is not a unit imaginary", {{"e", to_json(ev)}});
      }
      if (!(epart(one, e) == one)) fail("(e_0)_e != 1", {{"e", to_json(ev)}});
      for (std::size_t i = 1; i < dimension(kind); ++i) {
        const auto expected = ev[i] * ev;
        if (!(epart(AlgebraElement::basis(kind, real, i), e) == expected)) {
          fail("(e_i)_e != alpha_i e", {{"e", to_json(ev)}, {"i", i}});
        }
      }
      for (std::size_t t = 0; t < 5; ++t) {
        const auto x = s.element(kind, real);
        const auto p = epart(x, e);
        if (!(epart(p, e) == p)) fail("e-part is not a projection", {{"e", to_json(ev)}, {"x", to_json(x)}});
      }
    }
    if (kind != AlgebraKind::Re1) {
      const auto c = FieldTag::GaussianComplex;
      std::vector<GaussRational> coords(dimension(kind));
      coords[2] = Rational(3, 5);
      coords[3] = Rational(4, 5);
      const UnitImaginary e(AlgebraElement(kind, c, coords));
      if (!(epart(a_element(c, kind), e) == GaussRational(Rational(1, 2)) * AlgebraElement::one(kind, c))) {
        fail("(a)_e != 1/2 for e orthogonal to e_1", {{"e", to_json(e.element())}});
      }
    }
  });
}

// ---------------------------------------------------------------- symtensor

CheckResult check_oracle_random(AlgebraKind kind, std::size_t n, std::size_t pairs,
                                const VerifyOptions& opts) {
  return run_check("symtensor.oracle." + kind_tag(kind) + ".n" + std::to_string(n), [&](CheckResult& r) {
    require_dense(kind, n, opts.dense_bound);
    Sampler s(opts.seed ^ (n * 131 + dimension(kind)));
    for (std::size_t t = 0; t < pairs; ++t) {
      const FieldTag f = t % 2 == 0 ? FieldTag::RationalReal : FieldTag::GaussianComplex;
      const auto x = s.tensor(kind, f, n, 1 + t % 4);
      const auto y = s.tensor(kind, f, n, 1 + (t / 4) % 4);
      const auto sparse = mul(x, y);
      const auto dense = dense_mul_oracle(x, y, opts.dense_bound);
      if (!(sparse == dense)) {
        fail("sparse product disagrees with the dense oracle",
             {{"x", to_json(x)}, {"y", to_json(y)}, {"sparse", to_json(sparse)}, {"dense", to_json(dense)}});
      }
    }
    r.detail = std::to_string(pairs) + " random pairs";
  });
}

CheckResult check_symtensor_laws(AlgebraKind kind, std::size_t n, const VerifyOptions& opts) {
  return run_check("symtensor.laws." + kind_tag(kind) + ".n" + std::to_string(n), [&](CheckResult&) {
    const std::size_t d = dimension(kind);
    const Rational expected_dim = binomial(static_cast<long>(n + d - 1), static_cast<long>(d - 1));
    if (!(Rational(static_cast<long>(key_space(kind, n).size())) == expected_dim)) {
      fail("key enumeration has the wrong cardinality", {{"size", key_space(kind, n).size()}});
    }
    Sampler s(opts.seed + n);
    const std::size_t rounds = std::min<std::size_t>(opts.samples, 10);
    for (std::size_t t = 0; t < rounds; ++t) {
      const FieldTag f = t % 2 == 0 ? FieldTag::RationalReal : FieldTag::GaussianComplex;
      const auto x = s.tensor(kind, f, n);
      const auto y = s.tensor(kind, f, n);
      const auto z = s.tensor(kind, f, n);
      const auto one = SymTensor::unit(kind, f, n);
      Json ctx = {{"x", to_json(x)}, {"y", to_json(y)}};
      expect_equal(product(x, one, opts), x, "x * 1 != x", ctx);
      expect_equal(product(one, x, opts), x, "1 * x != x", ctx);
      const auto plain = plain_terms(x);
      expect_equal(symmetrize(plain, kind, f, n), x, "symmetrize(plain(x)) != x", ctx);
      expect_equal(conj_sym(product(x, y, opts)), product(conj_sym(x), conj_sym(y), opts),
                   "conjugation is not multiplicative", ctx);
      expect_equal(graft(x, SymTensor::scalar(kind, f, 1)), x, "graft with the scalar 1 changed x", ctx);
      if (kind != AlgebraKind::Octonion) {
        ctx["z"] = to_json(z);
        expect_equal(product(product(x, y, opts), z, opts), product(x, product(y, z, opts), opts),
                     "product is not associative", ctx);
        expect_equal(product(embed_sym(x, AlgebraKind::Octonion), embed_sym(y, AlgebraKind::Octonion), opts),
                     embed_sym(product(x, y, opts), AlgebraKind::Octonion), "embedding is not multiplicative",
                     ctx);
      }
      const auto v = s.element(kind, f);
      expect_equal(tensor_power(v, 2), graft(SymTensor::from_element(v), SymTensor::from_element(v)),
                   "tensor square differs from the graft square", {{"v", to_json(v)}});
    }
  });
}

// ---------------------------------------------------------------- central idempotents

// The identity also involves beta^{(n-2)}_{n-1}, one step past the partition range, so the
// library value is used inside the range and the defining polynomial outside it.
static Rational beta_extended(std::size_t n, std::size_t m, std::size_t d) {
  if (m <= n) return beta(n, m, d).value;
  const long nl = static_cast<long>(n), ml = static_cast<long>(m), dl = static_cast<long>(d);
  return Rational(2 * (nl - ml) * (2 * ml + dl - 2), dl * nl * (nl - 1));
}

CheckResult check_beta(std::size_t max_n) {
  return run_check("central.beta", [&](CheckResult&) {
    for (std::size_t d : {2, 4, 8}) {
      const long dl = static_cast<long>(d);
      if (!(beta(2, 1, d).value == Rational(1)) || !(beta(2, 2, d).value == Rational(0)) ||
          !(beta(3, 2, d).value == Rational(dl + 2, 3 * dl))) {
        fail("printed special values of beta not reproduced", {{"d", d}});
      }
      for (std::size_t n = 2; n <= max_n; ++n) {
        for (std::size_t k = ceil_half(n); k <= n; ++k) {
          for (std::size_t l = ceil_half(n); l <= n; ++l) {
            if (k != l && beta(n, k, d).value == beta(n, l, d).value) {
              fail("beta values coincide", {{"n", n}, {"d", d}, {"k", k}, {"l", l}});
            }
            if (n < 4) continue;
            const long nl = static_cast<long>(n), kl = static_cast<long>(k), ll = static_cast<long>(l);
            const Rational lhs = Rational(nl * (nl - 1)) * (beta(n, k, d).value - beta(n, l, d).value);
            const Rational rhs = Rational((nl - 2) * (nl - 3)) *
                                 (beta_extended(n - 2, k - 1, d) - beta_extended(n - 2, l - 1, d));
            const Rational closed = Rational(2, dl) * Rational(kl - ll) * Rational(2 * nl - (2 * kl + 2 * ll + dl - 2));
            if (!(lhs == rhs) || !(lhs == closed)) {
              fail("beta identity fails", {{"n", n}, {"d", d}, {"k", k}, {"l", l},
                                           {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
            }
          }
        }
      }
    }
  });
}

CheckResult check_central_routes(AlgebraKind kind, std::size_t n, const VerifyOptions&) {
  return run_check("central.routes." + kind_tag(kind) + ".n" + std::to_string(n), [&](CheckResult&) {
    for (std::size_t m = ceil_half(n); m <= n; ++m) {
      const auto p = central_idempotent_product(n, m, kind);
      const auto r = central_idempotent_recursive(n, m, kind);
      expect_equal(r, p, "recursive route differs from the product route", {{"m", m}});
      if (kind != AlgebraKind::Re1 && m < n) {
        expect_equal(central_idempotent_closed(n, m, kind), p, "closed form differs from the product route",
                     {{"m", m}});
      }
    }
  });
}

CheckResult check_central_family(AlgebraKind kind, std::size_t n, const VerifyOptions& opts) {
  return run_check("central.family." + kind_tag(kind) + ".n" + std::to_string(n), [&](CheckResult& r) {
    const auto real = FieldTag::RationalReal;
    CheckResult set = check_set(central_set(n, kind, real), "central", opts);
    if (!set.passed()) fail(set.detail, set.witnesses);
    if (n >= 2) {
      const auto top = central_idempotent(n, n, kind, real);
      if (!product(top, triangle_n(kind, real, n), opts).is_zero()) fail("e_n triangle^{(n)} != 0", {});
    }
    Sampler s(opts.seed + 7 * n + dimension(kind));
    for (std::size_t t = 0; t < opts.samples; ++t) {
      const auto x = s.tensor(kind, real, n);
      const auto y = s.tensor(kind, real, n);
      for (std::size_t m = ceil_half(n); m <= n; ++m) {
        const auto& e = central_idempotent(n, m, kind, real);
        Json ctx = {{"m", m}, {"x", to_json(x)}, {"y", to_json(y)}};
        const auto ex = product(e, x, opts);
        const auto xe = product(x, e, opts);
        const auto xy = product(x, y, opts);
        expect_equal(ex, xe, "e x != x e", ctx);
        expect_equal(product(ex, y, opts), product(e, xy, opts), "(e x) y != e (x y)", ctx);
        expect_equal(product(xe, y, opts), product(x, product(e, y, opts), opts), "(x e) y != x (e y)", ctx);
        expect_equal(product(xy, e, opts), product(x, product(y, e, opts), opts), "(x y) e != x (y e)", ctx);
      }
    }
    r.detail = std::to_string(opts.samples) + " random pairs";
  });
}

CheckResult check_triangle_lemma(AlgebraKind kind, const VerifyOptions& opts) {
  return run_check("central.triangle-lemma." + kind_tag(kind), [&](CheckResult&) {
    Sampler s(opts.seed + 3);
    const std::size_t d = dimension(kind);
    for (std::size_t t = 0; t < d + opts.samples; ++t) {
      const FieldTag f = t < d || t % 2 == 0 ? FieldTag::RationalReal : FieldTag::GaussianComplex;
      const auto x = t < d ? AlgebraElement::basis(kind, f, t) : s.element(kind, f);
      const auto tri = triangle(kind, f);
      const auto xx = tensor_power(x, 2);
      const auto expected = norm(x) * tri;
      expect_equal(product(tri, xx, opts), expected, "triangle (x (x) x) != N(x) triangle", {{"x", to_json(x)}});
      expect_equal(product(xx, tri, opts), expected, "(x (x) x) triangle != N(x) triangle", {{"x", to_json(x)}});
    }
    const auto tri = triangle(kind, FieldTag::RationalReal);
    expect_equal(product(tri, tri, opts), tri, "triangle is not idempotent");
    if (kind == AlgebraKind::Octonion) {
      const auto th = embed_sym(triangle(AlgebraKind::Quaternion, FieldTag::RationalReal), kind);
      expect_equal(product(tri, th, opts), tri, "triangle_O triangle_H != triangle_O");
    }
  });
}

CheckResult check_trianglel(AlgebraKind kind, std::size_t n, const VerifyOptions& opts) {
  return run_check("central.triangle-powers." + kind_tag(kind) + ".n" + std::to_string(n), [&](CheckResult&) {
    const auto real = FieldTag::RationalReal;
    Matrix columns;
    for (std::size_t m = ceil_half(n); m <= n; ++m) columns.push_back(coordinates(central_idempotent(n, m, kind, real)));
    for (std::size_t l = 0; l <= n / 2; ++l) {
      const auto target = graft(SymTensor::unit(kind, real, n - 2 * l), graft_power(triangle(kind, real), l));
      const auto c = solve(columns, coordinates(target));
      if (!c) fail("not in the span of the central idempotents", {{"l", l}, {"tensor", to_json(target)}});
      for (std::size_t m = ceil_half(n); m <= n; ++m) {
        const bool nonzero = !(*c)[m - ceil_half(n)].is_zero();
        if (nonzero != (m <= n - l)) {
          fail("coefficient support differs from m <= n - l",
               {{"l", l}, {"m", m}, {"coefficient", to_json((*c)[m - ceil_half(n)])}});
        }
      }
    }
    (void)opts;
  });
}

CheckResult check_zero_cond(AlgebraKind kind, std::size_t n, const VerifyOptions& opts) {
  return run_check("central.graft-injective." + kind_tag(kind) + ".n" + std::to_string(n), [&](CheckResult&) {
    const auto real = FieldTag::RationalReal;
    for (std::size_t l = 1; l <= n / 2; ++l) {
      const auto power = graft_power(triangle(kind, real), l);
      Matrix rows;
      for (const auto& key : key_space(kind, n - 2 * l).keys()) {
        rows.push_back(coordinates(graft(SymTensor::monomial(kind, real, key), power)));
      }
      const std::size_t r = rank(rows);
      if (r != rows.size()) fail("grafted family is linearly dependent", {{"l", l}, {"rank", r}, {"size", rows.size()}});
    }
    (void)opts;
  });
}

CheckResult check_decomposition_rank(std::size_t n, FieldTag field, const VerifyOptions& opts) {
  return run_check("central.decomposition." + std::string(to_string(field)) + ".n" + std::to_string(n),
                   [&](CheckResult& r) {
    const auto h = AlgebraKind::Quaternion;
    require_dense(h, n, opts.dense_bound);
    std::size_t total = 0;
    Json ranks = Json::array();
    for (std::size_t m = ceil_half(n); m <= n; ++m) {
      const std::size_t got = checked_ideal_rank(central_idempotent(n, m, h, field), opts);
      const std::size_t expected = ComponentDescriptor::of(n, m, field).expected_component_dim;
      ranks.push_back(got);
      if (got != expected) fail("component dimension mismatch", {{"m", m}, {"rank", got}, {"expected", expected}});
      total += got;
    }
    const auto whole = static_cast<std::size_t>(binomial(static_cast<long>(n + 3), 3).numerator().get_ui());
    if (total != whole) fail("component ranks do not add up", {{"ranks", ranks}, {"expected_total", whole}});
    r.detail = "ranks " + ranks.dump();
  });
}

CheckResult check_annihilation(std::size_t n, const VerifyOptions& opts) {
  return run_check("central.annihilation.n" + std::to_string(n), [&](CheckResult&) {
    for (FieldTag f : {FieldTag::RationalReal, FieldTag::GaussianComplex}) {
      for (std::size_t m = ceil_half(n); m <= n; ++m) {
        for (std::size_t l = m + 1; l <= n; ++l) {
          const auto p = product(embed_sym(central_idempotent(n, l, AlgebraKind::Quaternion, f), AlgebraKind::Octonion),
                                 central_idempotent(n, m, AlgebraKind::Octonion, f), opts);
          if (!p.is_zero()) fail("e_{l,H} e_{m,O} != 0", {{"l", l}, {"m", m}, {"product", to_json(p)}});
        }
      }
    }
  });
}

// ---------------------------------------------------------------- idempotent sets

CheckResult check_set(const IdempotentSet& set, const std::string& check_id, const VerifyOptions& opts) {
  return run_check(check_id, [&](CheckResult& r) {
    const auto& unit = set.expected_unit;
    if (set.labels.size() != set.tensors.size()) fail("labels and tensors differ in length", {});
    if (set.tensors.size() != set.expected_count) {
      fail("cardinality differs from the expected count",
           {{"size", set.tensors.size()}, {"expected_count", set.expected_count}});
    }
    SymTensor sum(unit.kind(), unit.field(), unit.degree());
    for (std::size_t i = 0; i < set.tensors.size(); ++i) {
      const auto& f = set.tensors[i];
      if (f.kind() != unit.kind() || f.field() != unit.field() || f.degree() != unit.degree()) {
        fail("element lives in a different algebra", {{"i", i}, {"label", to_json(set.labels[i])}});
      }
      if (f.is_zero()) fail("element is zero", {{"i", i}, {"label", to_json(set.labels[i])}});
      sum += f;
    }
    for (std::size_t i = 0; i < set.tensors.size(); ++i) {
      for (std::size_t j = 0; j < set.tensors.size(); ++j) {
        const auto p = product(set.tensors[i], set.tensors[j], opts);
        const bool ok = i == j ? p == set.tensors[i] : p.is_zero();
        if (!ok) {
          fail(i == j ? "element is not idempotent" : "elements are not orthogonal",
               {{"i", i}, {"j", j}, {"left_label", to_json(set.labels[i])},
                {"right_label", to_json(set.labels[j])}, {"left", to_json(set.tensors[i])},
                {"right", to_json(set.tensors[j])}, {"product", to_json(p)}});
        }
      }
    }
    if (!(sum == unit)) fail("elements do not sum to the unit", {{"sum", to_json(sum)}, {"unit", to_json(unit)}});
    r.detail = std::to_string(set.tensors.size()) + " elements";
  });
}

CheckResult check_primitivity(const IdempotentSet& set, const ComponentDescriptor& desc,
                              const VerifyOptions& opts) {
  const std::string id = "primitivity." + std::string(to_string(desc.field)) + ".n" + std::to_string(desc.n) +
                         ".l" + std::to_string(desc.ell);
  return run_check(id, [&](CheckResult& r) {
    if (set.tensors.empty()) return;
    require_dense(set.tensors.front().kind(), set.tensors.front().degree(), opts.dense_bound);
    for (std::size_t i = 0; i < set.tensors.size(); ++i) {
      const std::size_t got = checked_ideal_rank(set.tensors[i], opts);
      if (got != desc.expected_minimal_ideal_dim) {
        fail("left ideal rank differs from the minimal ideal dimension",
             {{"i", i}, {"label", to_json(set.labels[i])}, {"rank", got},
              {"expected", desc.expected_minimal_ideal_dim}, {"f", to_json(set.tensors[i])}});
      }
    }
    r.detail = std::to_string(set.tensors.size()) + " elements of rank " + std::to_string(desc.expected_minimal_ideal_dim);
  });
}

CheckResult check_theorem1_cross(std::size_t n, const VerifyOptions& opts) {
  return run_check("thm1.real-vs-conjugate-pairs.n" + std::to_string(n), [&](CheckResult&) {
    const auto h = AlgebraKind::Quaternion;
    for (std::size_t l = ceil_half(n); l <= n; ++l) {
      if (n % 2 == 1) {
        for (std::size_t k = n - l; k <= (n - 1) / 2; ++k) {
          expect_equal(theorem1_odd_element(n, l, k), conjugate_pair_element(n, l, k),
                       "odd-n element differs from f + conj(f)", {{"l", l}, {"k", k}});
        }
        continue;
      }
      const auto sq = product(binomial_a_element(n, n / 2), central_idempotent(n, l, h, FieldTag::GaussianComplex), opts);
      expect_equal(theorem1_square_element(n, l), sq.with_field(FieldTag::RationalReal),
                   "square element differs from the middle complex element", {{"l", l}});
      for (std::size_t k = n - l; k + 1 <= n / 2; ++k) {
        for (int delta : {-1, 1}) {
          const auto support = theorem1_delta_element(n, l, k, delta, DeltaSumLimit::Support);
          Json ctx = {{"l", l}, {"k", k}, {"delta", delta}};
          expect_equal(support, conjugate_pair_element(n, l, k, delta),
                       "delta element differs from (f + conj f)(1 + delta E)/2", ctx);
          expect_equal(theorem1_delta_element(n, l, k, delta, DeltaSumLimit::HalfDifference), support,
                       "summation limit floor(n/4 - k/2) changes the element", ctx);
          expect_equal(theorem1_delta_element(n, l, k, delta, DeltaSumLimit::QuarterMinusHalfK), support,
                       "summation limit n/4 - floor(k/2) changes the element", ctx);
        }
      }
    }
  });
}

CheckResult check_vanishing_family(std::size_t n, const VerifyOptions& opts) {
  return run_check("thm1.vanishing.n" + std::to_string(n), [&](CheckResult&) {
    for (std::size_t l = ceil_half(n); l <= n; ++l) {
      const auto& e = central_idempotent(n, l, AlgebraKind::Quaternion, FieldTag::GaussianComplex);
      for (std::size_t k = 0; k <= n; ++k) {
        if (k + l >= n && k <= l) continue;
        const auto p = product(binomial_a_element(n, k), e, opts);
        if (!p.is_zero()) fail("element outside the k-range does not vanish", {{"l", l}, {"k", k}, {"product", to_json(p)}});
      }
    }
  });
}

CheckResult check_counts(std::size_t max_n) {
  return run_check("counts.formulas", [&](CheckResult&) {
    for (FieldTag f : {FieldTag::RationalReal, FieldTag::GaussianComplex}) {
      for (std::size_t n = 1; n <= max_n; ++n) {
        std::size_t by_ell = 0, by_m = 0;
        for (std::size_t l = ceil_half(n); l <= n; ++l) by_ell += theorem1_count(n, l, f);
        for (std::size_t m = ceil_half(n); m <= n; ++m) {
          std::size_t inner = 0;
          for (std::size_t l = ceil_half(n); l <= m; ++l) inner += theorem1_count(n, l, f);
          if (inner != theorem3_count(n, m, f)) fail("count for m is not the sum of the per-ell counts", {{"n", n}, {"m", m}});
          by_m += inner;
        }
        if (by_ell != corollary2_count(n, f)) fail("union count over ell mismatch", {{"n", n}, {"field", to_string(f)}});
        if (by_m != corollary4_count(n, f)) fail("union count over m mismatch", {{"n", n}, {"field", to_string(f)}});
        const bool halve = f == FieldTag::RationalReal && n % 2 == 1;
        const std::size_t cor2 = n % 2 == 0 ? (n + 2) * (n + 2) / 4 : (n + 1) * (n + 3) / (halve ? 8 : 4);
        const std::size_t cor4 =
            n % 2 == 0 ? (n + 2) * (n + 3) * (n + 4) / 24 : (n + 1) * (n + 3) * (n + 5) / (halve ? 48 : 24);
        if (by_ell != cor2 || by_m != cor4) {
          fail("counts differ from the closed forms",
               {{"n", n}, {"field", to_string(f)}, {"cor2", by_ell}, {"cor4", by_m}});
        }
      }
    }
    const auto c = FieldTag::GaussianComplex;
    const auto q = FieldTag::RationalReal;
    if (corollary2_count(5, c) != 12 || corollary2_count(4, q) != 9 || corollary2_count(3, q) != 3 ||
        corollary2_count(2, c) != 4 || corollary4_count(2, c) != 5 || corollary4_count(3, c) != 8) {
      fail("printed counts not reproduced", {});
    }
  });
}

CheckResult check_golden_n2m2(const VerifyOptions& opts) {
  return run_check("golden.n2m2", [&](CheckResult&) {
    const auto o = AlgebraKind::Octonion;
    const auto h = AlgebraKind::Quaternion;
    const auto real = FieldTag::RationalReal;
    const auto& e2o = central_idempotent(2, 2, o, real);
    auto diag = [&](int c0, std::initializer_list<std::pair<int, int>> entries) {
      SymTensor::Terms t{{MultiIndex{0, 0}, Rational(c0, 4)}};
      for (auto [i, c] : entries) t.emplace(MultiIndex{i, i}, Rational(c, 4));
      return product(SymTensor(o, real, 2, std::move(t)), e2o, opts);
    };

    // Printed closed forms.
    const SymTensor tau_printed[4] = {
        diag(1, {{1, 1}, {2, 1}, {3, 1}}), diag(1, {{1, 1}, {2, -1}, {3, -1}}),
        diag(1, {{1, -1}, {2, 1}, {3, -1}}), diag(1, {{1, -1}, {2, -1}, {3, 1}})};

    // Printed structural definitions.
    const auto sq = square_element(h, real);
    const auto one = SymTensor::unit(h, real, 2);
    const auto e1h = central_idempotent(2, 1, h, real);
    const auto e2h = central_idempotent(2, 2, h, real);
    auto half_e2 = [&](int delta) {
      SymTensor p = one + Rational(delta) * tensor_power(AlgebraElement::basis(h, real, 2), 2);
      p *= Rational(1, 2);
      return p;
    };
    auto lift = [&](const SymTensor& x) { return product(embed_sym(x, o), e2o, opts); };
    const SymTensor tau_struct[4] = {
        lift(product(sq, e1h, opts)), lift(product(sq, e2h, opts)),
        lift(product(product(one - sq, half_e2(1), opts), e2h, opts)),
        lift(product(product(one - sq, half_e2(-1), opts), e2h, opts))};

    // From the construction, matched through labels.
    const IdempotentSet set = theorem3_set(2, 2, real);
    auto find = [&](std::size_t l, std::size_t k, std::optional<int> delta) -> const SymTensor& {
      for (std::size_t i = 0; i < set.labels.size(); ++i) {
        const auto& lab = set.labels[i];
        if (lab.ell == l && lab.k == k && lab.delta == delta) return set.tensors[i];
      }
      fail("label missing from theorem3_set(2, 2)", {{"l", l}, {"k", k}});
    };
    const SymTensor* tau_set[4] = {&find(1, 1, std::nullopt), &find(2, 1, std::nullopt), &find(2, 0, 1),
                                   &find(2, 0, -1)};
    for (std::size_t i = 0; i < 4; ++i) {
      expect_equal(*tau_set[i], tau_printed[i], "tau differs from its printed closed form", {{"tau", i}});
      expect_equal(tau_struct[i], tau_printed[i], "tau definition differs from its closed form", {{"tau", i}});
    }
    CheckResult tau_check = check_set(set, "tau", opts);
    if (!tau_check.passed()) fail("tau set: " + tau_check.detail, tau_check.witnesses);

    const int rho_idx[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    IdempotentSet rho{{}, {}, e2o, 7};
    for (std::size_t i = 0; i < 7; ++i) {
      rho.labels.push_back({Family::Central, 2, std::nullopt, 2, i + 1, std::nullopt});
      rho.tensors.push_back(diag(1, {{rho_idx[i][0], 1}, {rho_idx[i][1], 1}, {rho_idx[i][2], 1}}));
    }
    CheckResult rho_check = check_set(rho, "rho", opts);
    if (!rho_check.passed()) fail("rho set: " + rho_check.detail, rho_check.witnesses);
    expect_equal(product(triangle(o, real), e2o, opts), SymTensor(o, real, 2), "triangle_O e_{2,O} != 0");

    expect_equal(tau_printed[0], rho.tensors[0], "tau_0 != rho_1");
    expect_equal(tau_printed[1], rho.tensors[1] + rho.tensors[2], "tau_1 != rho_2 + rho_3");
    expect_equal(tau_printed[2], rho.tensors[3] + rho.tensors[4], "tau_2 != rho_4 + rho_5");
    expect_equal(tau_printed[3], rho.tensors[5] + rho.tensors[6], "tau_3 != rho_6 + rho_7");
  });
}

// ---------------------------------------------------------------- linear algebra at small n

CheckResult check_local_global(std::size_t n, std::size_t samples, const VerifyOptions& opts) {
  if (n < 2) throw ArgumentError("local-global check requires n >= 2");
  return run_check("local-global.n" + std::to_string(n), [&](CheckResult& r) {
    const auto h = AlgebraKind::Quaternion;
    const auto real = FieldTag::RationalReal;
    require_dense(h, n, opts.dense_bound);
    const auto points = im1_rational_samples(h, samples, opts.seed);
    const auto tri = triangle_n(h, real, n);
    const Matrix ideal = ideal_rows(tri, opts);
    const std::size_t ideal_rank = rank(ideal);
    const auto zero = AlgebraElement(h, real);

    auto member = [&](const SymTensor& t) {
      Matrix rows = ideal;
      rows.push_back(coordinates(t));
      return rank(std::move(rows)) == ideal_rank;
    };
    auto vanishes = [&](const SymTensor& t) {
      return std::all_of(points.begin(), points.end(), [&](const UnitImaginary& e) { return epart_n(t, e) == zero; });
    };

    Sampler s(opts.seed + 11 * n);
    const std::size_t members = std::min<std::size_t>(opts.samples, 20);
    for (std::size_t t = 0; t < members; ++t) {
      const auto x = product(s.tensor(h, real, n), tri, opts);
      if (!vanishes(x)) fail("ideal element has a nonzero e-part", {{"r", to_json(x)}});
      if (!member(x)) fail("ideal element fails the linear-algebra membership test", {{"r", to_json(x)}});
    }

    std::vector<std::pair<std::string, SymTensor>> battery = {
        {"unit", SymTensor::unit(h, real, n)},
        {"triangle_n", tri},
        {"e_n", central_idempotent(n, n, h, real)},
        {"e1_power", tensor_power(AlgebraElement::basis(h, real, 1), n)},
        {"e2_power", tensor_power(AlgebraElement::basis(h, real, 2), n)},
        {"e3_graft", graft(SymTensor::from_element(AlgebraElement::basis(h, real, 3)), SymTensor::unit(h, real, n - 1))},
        {"square_graft", graft(square_element(h, real), SymTensor::unit(h, real, n - 2))},
    };
    for (std::size_t m = ceil_half(n); m < n; ++m) battery.emplace_back("e_" + std::to_string(m), central_idempotent(n, m, h, real));
    std::size_t non_members = 0;
    for (const auto& [name, t] : battery) {
      const bool in_ideal = member(t);
      non_members += in_ideal ? 0 : 1;
      if (in_ideal != vanishes(t)) {
        fail("membership and vanishing of e-parts disagree",
             {{"element", name}, {"member", in_ideal}, {"r", to_json(t)}});
      }
    }
    const auto en_tri = product(central_idempotent(n, n, h, real), tri, opts);
    if (!en_tri.is_zero()) fail("e_n triangle^{(n)} != 0", {{"product", to_json(en_tri)}});
    r.detail = std::to_string(points.size()) + " sample unit imaginaries, " + std::to_string(non_members) +
               " structured non-members";
  });
}

CheckResult check_zero_intersection(char part, std::size_t n, const VerifyOptions& opts) {
  if (part != 'a' && part != 'b') throw ArgumentError("part must be 'a' or 'b'");
  return run_check("zero-intersection." + std::string(1, part) + ".n" + std::to_string(n), [&](CheckResult&) {
    const auto inner = part == 'a' ? AlgebraKind::Re1 : AlgebraKind::Quaternion;
    const auto outer = part == 'a' ? AlgebraKind::Quaternion : AlgebraKind::Octonion;
    const auto real = FieldTag::RationalReal;
    require_dense(outer, n, opts.dense_bound);
    Matrix sub;
    for (const auto& key : key_space(inner, n).keys()) {
      sub.push_back(coordinates(SymTensor::monomial(outer, real, key)));
    }
    const Matrix ideal = ideal_rows(triangle_n(outer, real, n), opts);
    const std::size_t dim = intersection_dimension(sub, ideal);
    if (dim != 0) fail("intersection is nonzero", {{"dimension", dim}});
  });
}

CheckResult check_isomorphism_kernel(std::size_t n, std::size_t m, const VerifyOptions& opts) {
  check_partition_index(n, m);
  return run_check("isomorphism-kernel.n" + std::to_string(n) + ".m" + std::to_string(m), [&](CheckResult& r) {
    const auto h = AlgebraKind::Quaternion;
    const auto o = AlgebraKind::Octonion;
    const auto real = FieldTag::RationalReal;
    require_dense(o, n, opts.dense_bound);
    const auto& emo = central_idempotent(n, m, o, real);
    auto phi = [&](const SymTensor& x) { return product(embed_sym(x, o), emo, opts); };

    SymTensor keep(h, real, n);
    std::size_t expected = 0;
    for (std::size_t l = ceil_half(n); l <= n; ++l) {
      const auto& e = central_idempotent(n, l, h, real);
      if (l > m) {
        const auto p = phi(e);
        if (!p.is_zero()) fail("e_{l,H} e_{m,O} != 0", {{"l", l}, {"product", to_json(p)}});
      } else {
        keep += e;
        expected += ComponentDescriptor::of(n, l, real).expected_component_dim;
      }
    }
    Matrix source, image;
    for (const auto& key : key_space(h, n).keys()) {
      const auto x = product(SymTensor::monomial(h, real, key), keep, opts);
      source.push_back(coordinates(x));
      image.push_back(coordinates(phi(x)));
    }
    const std::size_t rs = rank(source), ri = rank(image);
    if (rs != expected || ri != rs) {
      fail("restriction is not injective", {{"source_rank", rs}, {"image_rank", ri}, {"expected", expected}});
    }
    Sampler s(opts.seed + 13 * n + m);
    const std::size_t rounds = std::min<std::size_t>(opts.samples, 20);
    for (std::size_t t = 0; t < rounds; ++t) {
      const auto x = s.tensor(h, real, n);
      const auto y = s.tensor(h, real, n);
      expect_equal(phi(product(x, y, opts)), product(phi(x), phi(y), opts), "phi is not multiplicative",
                   {{"x", to_json(x)}, {"y", to_json(y)}});
    }
    r.detail = "rank " + std::to_string(rs);
  });
}

// ---------------------------------------------------------------- suite

std::string_view to_string(Profile profile) { return profile == Profile::Quick ? "quick" : "full"; }

Profile parse_profile(std::string_view text) {
  if (text == "quick") return Profile::Quick;
  if (text == "full") return Profile::Full;
  throw ArgumentError("unknown profile '" + std::string(text) + "'");
}

std::vector<CheckResult> run_suite(Profile profile, const VerifyOptions& opts) {
  const bool full = profile == Profile::Full;
  const std::size_t h_sets = full ? 5 : 3;     // component sets, primitivity
  const std::size_t h_central = full ? 6 : 3;  // central families
  const std::size_t o_max = full ? 4 : 3;      // octonion constructions
  const std::size_t o_dense = full ? 4 : 2;    // octonion dense work
  const std::size_t pairs = full ? 60 : 20;
  const auto h = AlgebraKind::Quaternion;
  const auto o = AlgebraKind::Octonion;
  const auto q = FieldTag::RationalReal;
  const auto c = FieldTag::GaussianComplex;
  const std::string fields[2] = {"rational", "gaussian"};

  std::vector<CheckResult> out;
  out.push_back(check_table_fidelity());
  out.push_back(check_quaternion_relations());
  for (auto k : {AlgebraKind::Re1, h, o}) {
    out.push_back(check_composition_law(k, opts));
    out.push_back(check_epart(k, opts));
    out.push_back(check_triangle_lemma(k, opts));
  }
  out.push_back(check_alternativity(opts));

  for (std::size_t n = 1; n <= (full ? 12 : 6); ++n) out.push_back(check_oracle_random(AlgebraKind::Re1, n, pairs, opts));
  for (std::size_t n = 1; n <= h_sets; ++n) out.push_back(check_oracle_random(h, n, pairs, opts));
  for (std::size_t n = 1; n <= o_dense; ++n) out.push_back(check_oracle_random(o, n, pairs, opts));
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto k : {AlgebraKind::Re1, h, o}) out.push_back(check_symtensor_laws(k, n, opts));
  }

  out.push_back(check_beta(10));
  out.push_back(check_counts(12));
  for (std::size_t n = 1; n <= h_central; ++n) {
    out.push_back(check_central_routes(h, n, opts));
    out.push_back(check_central_family(h, n, opts));
    out.push_back(check_trianglel(h, n, opts));
    out.push_back(check_zero_cond(h, n, opts));
  }
  for (std::size_t n = 1; n <= o_max; ++n) {
    out.push_back(check_central_routes(o, n, opts));
    out.push_back(check_central_family(o, n, opts));
    out.push_back(check_trianglel(o, n, opts));
    out.push_back(check_zero_cond(o, n, opts));
    out.push_back(check_annihilation(n, opts));
  }
  for (std::size_t n = 1; n <= h_sets; ++n) {
    out.push_back(check_decomposition_rank(n, q, opts));
    out.push_back(check_decomposition_rank(n, c, opts));
    out.push_back(check_set(cyclic_plane_set(n), "cyclic-plane.n" + std::to_string(n), opts));
  }

  for (std::size_t n = 1; n <= h_sets; ++n) {
    for (std::size_t l = ceil_half(n); l <= n; ++l) {
      for (FieldTag f : {q, c}) {
        const auto set = theorem1_set(n, l, f);
        const std::string suffix = std::string(to_string(f)) + ".n" + std::to_string(n) + ".l" + std::to_string(l);
        out.push_back(check_set(set, "thm1.set." + suffix, opts));
        out.push_back(check_primitivity(set, ComponentDescriptor::of(n, l, f), opts));
      }
    }
    out.push_back(check_theorem1_cross(n, opts));
    out.push_back(check_vanishing_family(n, opts));
    for (FieldTag f : {q, c}) {
      out.push_back(check_set(corollary2_set(n, f), "cor2.set." + std::string(to_string(f)) + ".n" + std::to_string(n), opts));
    }
  }
  for (std::size_t n = 1; n <= o_max; ++n) {
    for (FieldTag f : {q, c}) {
      const std::string tag = std::string(to_string(f)) + ".n" + std::to_string(n);
      for (std::size_t m = ceil_half(n); m <= n; ++m) {
        out.push_back(check_set(theorem3_set(n, m, f), "thm3.set." + tag + ".m" + std::to_string(m), opts));
      }
      out.push_back(check_set(corollary4_set(n, f), "cor4.set." + tag, opts));
    }
  }
  out.push_back(check_golden_n2m2(opts));

  for (std::size_t n = 2; n <= (full ? 4 : 3); ++n) {
    out.push_back(check_local_global(n, 8, opts));
    out.push_back(check_zero_intersection('a', n, opts));
  }
  for (std::size_t n = 2; n <= (full ? 3 : 2); ++n) out.push_back(check_zero_intersection('b', n, opts));
  for (std::size_t n = 1; n <= o_dense; ++n) {
    for (std::size_t m = ceil_half(n); m <= n; ++m) out.push_back(check_isomorphism_kernel(n, m, opts));
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  return out;
}

SuiteSummary summarize(const std::vector<CheckResult>& results) {
  SuiteSummary s;
  for (const auto& r : results) {
    switch (r.status) {
      case CheckStatus::Passed: ++s.passed; break;
      case CheckStatus::Failed: ++s.failed; break;
      case CheckStatus::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

Json to_json(const CheckResult& result, bool with_timing) {
  Json out = {{"check_id", result.check_id}, {"status", to_string(result.status)},
              {"passed", result.passed()}};
  if (!result.detail.empty()) out["detail"] = result.detail;
  if (!result.witnesses.is_null()) out["witnesses"] = result.witnesses;
  if (with_timing) out["elapsed_ms"] = std::chrono::duration<double, std::milli>(result.elapsed).count();
  return out;
}

Json report_json(const std::vector<CheckResult>& results, Profile profile, bool with_timing) {
  Json list = Json::array();
  for (const auto& r : results) list.push_back(to_json(r, with_timing));
  const auto s = summarize(results);
  return {{"suite", "symidem"},
          {"profile", to_string(profile)},
          {"results", std::move(list)},
          {"summary", {{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}}}};
}

}  // namespace symidem
