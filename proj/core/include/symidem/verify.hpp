#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "symidem/idempotents.hpp"
#include "symidem/json_io.hpp"
#include "symidem/symtensor.hpp"

namespace symidem {

enum class CheckStatus { Passed, Failed, Skipped };
std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::Passed;
  /// Counterexample payload; non-null whenever status is Failed.
  Json witnesses;
  std::string detail;
  std::chrono::duration<double> elapsed{};

  bool passed() const { return status == CheckStatus::Passed; }
};

/// Expected sizes for the component S_ell of Sym^n H over a field.
struct ComponentDescriptor {
  std::size_t n;
  std::size_t ell;
  FieldTag field;
  std::size_t matrix_size;
  std::size_t expected_component_dim;
  std::size_t expected_minimal_ideal_dim;

  static ComponentDescriptor of(std::size_t n, std::size_t ell, FieldTag field);
};

/// Counts products cross-checked against the dense oracle.
struct ProductAudit {
  std::size_t checked = 0;
  std::size_t beyond_bound = 0;
};

struct VerifyOptions {
  std::size_t dense_bound = kDefaultDenseBound;
  std::uint64_t seed = 0xC0FFEE;
  std::size_t samples = 50;
  /// When set, every product formed by a check is also computed by the dense oracle.
  ProductAudit* audit = nullptr;
};

/// Deterministic random elements with small rational coefficients.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  GaussRational scalar(FieldTag field);
  AlgebraElement element(AlgebraKind kind, FieldTag field);
  /// `terms` random keys (possibly repeated, then merged).
  SymTensor tensor(AlgebraKind kind, FieldTag field, std::size_t n, std::size_t terms = 3);

private:
  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }
  std::mt19937_64 rng_;
};

// Algebra table and composition-algebra laws.
CheckResult check_table_fidelity();
CheckResult check_quaternion_relations();
CheckResult check_composition_law(AlgebraKind kind, const VerifyOptions& opts = {});
CheckResult check_alternativity(const VerifyOptions& opts = {});
CheckResult check_epart(AlgebraKind kind, const VerifyOptions& opts = {});

// Symmetric tensor arithmetic.
CheckResult check_oracle_random(AlgebraKind kind, std::size_t n, std::size_t pairs,
                                const VerifyOptions& opts = {});
CheckResult check_symtensor_laws(AlgebraKind kind, std::size_t n, const VerifyOptions& opts = {});

// Central idempotents.
CheckResult check_beta(std::size_t max_n = 10);
CheckResult check_central_routes(AlgebraKind kind, std::size_t n, const VerifyOptions& opts = {});
CheckResult check_central_family(AlgebraKind kind, std::size_t n, const VerifyOptions& opts = {});
CheckResult check_triangle_lemma(AlgebraKind kind, const VerifyOptions& opts = {});
CheckResult check_trianglel(AlgebraKind kind, std::size_t n, const VerifyOptions& opts = {});
CheckResult check_zero_cond(AlgebraKind kind, std::size_t n, const VerifyOptions& opts = {});
CheckResult check_decomposition_rank(std::size_t n, FieldTag field, const VerifyOptions& opts = {});
CheckResult check_annihilation(std::size_t n, const VerifyOptions& opts = {});

// Idempotent sets.
CheckResult check_set(const IdempotentSet& set, const std::string& check_id = "set",
                      const VerifyOptions& opts = {});
CheckResult check_primitivity(const IdempotentSet& set, const ComponentDescriptor& desc,
                              const VerifyOptions& opts = {});
CheckResult check_theorem1_cross(std::size_t n, const VerifyOptions& opts = {});
CheckResult check_vanishing_family(std::size_t n, const VerifyOptions& opts = {});
CheckResult check_counts(std::size_t max_n = 12);
CheckResult check_golden_n2m2(const VerifyOptions& opts = {});

// Properties settled by exact linear algebra at small n.
CheckResult check_local_global(std::size_t n, std::size_t samples, const VerifyOptions& opts = {});
/// part 'a': Sym^n R[e1] against Sym^n H . triangle^{(n)}; part 'b': Sym^n H against Sym^n O . triangle^{(n)}.
CheckResult check_zero_intersection(char part, std::size_t n, const VerifyOptions& opts = {});
CheckResult check_isomorphism_kernel(std::size_t n, std::size_t m, const VerifyOptions& opts = {});

enum class Profile { Quick, Full };
std::string_view to_string(Profile profile);
Profile parse_profile(std::string_view text);

/// Results ordered by check_id.
std::vector<CheckResult> run_suite(Profile profile, const VerifyOptions& opts = {});

struct SuiteSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};
SuiteSummary summarize(const std::vector<CheckResult>& results);

Json to_json(const CheckResult& result, bool with_timing);
/// {"suite","profile","results":[...],"summary":{"passed","failed","skipped"}}
Json report_json(const std::vector<CheckResult>& results, Profile profile, bool with_timing);

}  // namespace symidem
