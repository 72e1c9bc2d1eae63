#include <doctest.h>

#include "symidem/errors.hpp"
#include "symidem/idempotents.hpp"
#include "symidem/json_io.hpp"
#include "symidem/verify.hpp"

using namespace symidem;

namespace {
constexpr auto H = AlgebraKind::Quaternion;
constexpr auto O = AlgebraKind::Octonion;
constexpr auto Q = FieldTag::RationalReal;
constexpr auto C = FieldTag::GaussianComplex;
}  // namespace

TEST_CASE("component descriptors") {
  const auto c = ComponentDescriptor::of(3, 3, C);
  CHECK(c.matrix_size == 4);
  CHECK(c.expected_minimal_ideal_dim == 4);
  CHECK(c.expected_component_dim == 16);
  const auto r = ComponentDescriptor::of(3, 3, Q);
  CHECK(r.matrix_size == 2);
  CHECK(r.expected_minimal_ideal_dim == 8);
  CHECK(r.expected_component_dim == 16);
  CHECK(ComponentDescriptor::of(4, 3, Q).expected_minimal_ideal_dim == 3);
  CHECK_THROWS_AS(ComponentDescriptor::of(4, 1, Q), ArgumentError);
}

TEST_CASE("check_set accepts complete sets and reports corruption") {
  CHECK(check_set(theorem1_set(3, 2, C)).passed());
  CHECK(check_set(corollary4_set(2, C)).passed());

  auto bad = theorem1_set(3, 2, C);
  auto terms = bad.tensors[0].terms();
  terms.begin()->second += GaussRational(1);
  bad.tensors[0] = SymTensor(H, C, 3, terms);
  const auto r = check_set(bad);
  CHECK(r.status == CheckStatus::Failed);
  CHECK_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.contains("left_label"));
  CHECK(r.witnesses["i"] == 0);

  auto short_set = theorem1_set(3, 3, C);
  short_set.tensors.pop_back();
  short_set.labels.pop_back();
  CHECK_FALSE(check_set(short_set).passed());
}

TEST_CASE("witnesses replay in isolation") {
  auto bad = theorem1_set(2, 2, C);
  bad.tensors[1] = bad.tensors[1] + bad.tensors[2];
  const auto r = check_set(bad);
  REQUIRE_FALSE(r.passed());
  const auto left = tensor_from_json(r.witnesses["left"]);
  const auto right = tensor_from_json(r.witnesses["right"]);
  const auto i = r.witnesses["i"].get<std::size_t>(), j = r.witnesses["j"].get<std::size_t>();
  const auto p = mul(left, right);
  CHECK(p == tensor_from_json(r.witnesses["product"]));
  CHECK((i == j ? !(p == left) : !p.is_zero()));
}

TEST_CASE("primitivity by rank") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t l = (n + 1) / 2; l <= n; ++l) {
      for (auto f : {Q, C}) CHECK(check_primitivity(theorem1_set(n, l, f), ComponentDescriptor::of(n, l, f)).passed());
    }
  }
  VerifyOptions tight;
  tight.dense_bound = 16;
  const auto skipped = check_primitivity(theorem1_set(3, 3, C), ComponentDescriptor::of(3, 3, C), tight);
  CHECK(skipped.status == CheckStatus::Skipped);
  CHECK_FALSE(skipped.detail.empty());
  IdempotentSet merged = theorem1_set(2, 2, C);
  merged.tensors[0] = merged.tensors[0] + merged.tensors[1];
  CHECK_FALSE(check_primitivity(merged, ComponentDescriptor::of(2, 2, C)).passed());
}

TEST_CASE("golden and linear-algebra checks") {
  CHECK(check_golden_n2m2().passed());
  CHECK(check_local_global(2, 8).passed());
  CHECK(check_local_global(3, 8).passed());
  CHECK_THROWS_AS(check_local_global(1, 8), ArgumentError);
  CHECK(check_zero_intersection('a', 2).passed());
  CHECK(check_zero_intersection('a', 3).passed());
  CHECK(check_zero_intersection('b', 2).passed());
  CHECK(check_isomorphism_kernel(2, 1).passed());
  CHECK(check_isomorphism_kernel(2, 2).passed());
  CHECK(check_isomorphism_kernel(3, 2).passed());
  CHECK(check_beta().passed());
  CHECK(check_counts().passed());
}

TEST_CASE("algebraic checks") {
  CHECK(check_table_fidelity().passed());
  CHECK(check_quaternion_relations().passed());
  for (auto k : {AlgebraKind::Re1, H, O}) {
    CHECK(check_composition_law(k).passed());
    CHECK(check_epart(k).passed());
    CHECK(check_triangle_lemma(k).passed());
  }
  CHECK(check_alternativity().passed());
  CHECK(check_central_routes(O, 3).passed());
  CHECK(check_trianglel(H, 4).passed());
  CHECK(check_zero_cond(H, 4).passed());
  CHECK(check_decomposition_rank(3, C).passed());
  CHECK(check_annihilation(3).passed());
  CHECK(check_theorem1_cross(4).passed());
  CHECK(check_vanishing_family(4).passed());
}

TEST_CASE("oracle checks skip beyond the bound") {
  VerifyOptions opts;
  opts.dense_bound = 64;
  CHECK(check_oracle_random(O, 2, 10, opts).passed());
  CHECK(check_oracle_random(O, 3, 10, opts).status == CheckStatus::Skipped);
}

TEST_CASE("audited products are counted") {
  ProductAudit audit;
  VerifyOptions opts;
  opts.audit = &audit;
  CHECK(check_set(theorem3_set(2, 2, Q), "tau", opts).passed());
  CHECK(audit.checked == 16);
  CHECK(audit.beyond_bound == 0);
}

TEST_CASE("report layout") {
  const std::vector<CheckResult> results{check_counts(), check_table_fidelity()};
  const Json j = report_json(results, Profile::Quick, false);
  CHECK(j["suite"] == "symidem");
  CHECK(j["profile"] == "quick");
  CHECK(j["results"].size() == 2);
  CHECK(j["summary"]["passed"] == 2);
  CHECK_FALSE(j["results"][0].contains("elapsed_ms"));
  CHECK(report_json(results, Profile::Quick, true)["results"][0].contains("elapsed_ms"));
  CHECK(parse_profile("full") == Profile::Full);
  CHECK_THROWS_AS(parse_profile("huge"), ArgumentError);
}

TEST_CASE("quick suite passes and is deterministic") {
  const auto a = run_suite(Profile::Quick);
  const auto s = summarize(a);
  CHECK(s.failed == 0);
  CHECK(s.skipped == 0);
  CHECK(std::is_sorted(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.check_id < y.check_id; }));
  const auto b = run_suite(Profile::Quick);
  CHECK(report_json(a, Profile::Quick, false).dump() == report_json(b, Profile::Quick, false).dump());
}
