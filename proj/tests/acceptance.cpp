// One line per acceptance criterion; exit status is the number of failures.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "symidem/idempotents.hpp"
#include "symidem/json_io.hpp"
#include "symidem/verify.hpp"

using namespace symidem;

namespace {

constexpr auto H = AlgebraKind::Quaternion;
constexpr auto O = AlgebraKind::Octonion;
constexpr auto Q = FieldTag::RationalReal;
constexpr auto C = FieldTag::GaussianComplex;

struct Outcome {
  bool ok = true;
  std::string note;

  void require(const CheckResult& r) {
    if (r.passed()) return;
    if (ok) note = r.check_id + ": " + (r.detail.empty() ? std::string(to_string(r.status)) : r.detail);
    ok = false;
  }
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note = what;
    ok = false;
  }
};

std::size_t thm1_formula(std::size_t n, std::size_t l, FieldTag f) {
  const std::size_t s = 2 * l - n + 1;
  return f == Q && n % 2 == 1 ? s / 2 : s;
}

ProductAudit audit;
VerifyOptions audited() {
  VerifyOptions o;
  o.audit = &audit;
  return o;
}

Outcome criterion1() {
  Outcome r;
  r.require(check_table_fidelity());
  r.require(check_quaternion_relations());
  return r;
}

Outcome criterion2() {
  Outcome r;
  const auto opts = audited();
  for (std::size_t n = 2; n <= 6; ++n) {
    r.require(check_central_family(H, n, opts));
    r.require(check_central_routes(H, n, opts));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    r.require(check_central_family(O, n, opts));
    r.require(check_central_routes(O, n, opts));
  }
  r.note = r.ok ? "H n=2..6, O n=2..4, 50 samples each" : r.note;
  return r;
}

Outcome criterion3() {
  Outcome r;
  const auto opts = audited();
  std::size_t sets = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t l = (n + 1) / 2; l <= n; ++l) {
      for (auto f : {Q, C}) {
        const auto set = theorem1_set(n, l, f);
        r.require(set.tensors.size() == thm1_formula(n, l, f),
                  "count mismatch at n=" + std::to_string(n) + " ell=" + std::to_string(l));
        r.require(check_set(set, "thm1.n" + std::to_string(n) + ".l" + std::to_string(l), opts));
        ++sets;
      }
    }
    r.require(check_theorem1_cross(n, opts));
  }
  if (r.ok) r.note = std::to_string(sets) + " sets, real sets equal conjugate-pair sums";
  return r;
}

Outcome criterion4() {
  Outcome r;
  const auto opts = audited();
  std::string complex_counts;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto f : {Q, C}) {
      std::size_t total = 0;
      for (std::size_t m = (n + 1) / 2; m <= n; ++m) {
        const auto set = theorem3_set(n, m, f);
        r.require(set.expected_unit == central_idempotent(n, m, O, f), "unit is not e_{m,O}");
        r.require(check_set(set, "thm3.n" + std::to_string(n) + ".m" + std::to_string(m), opts));
        total += set.tensors.size();
      }
      const auto cor4 = corollary4_set(n, f);
      r.require(check_set(cor4, "cor4.n" + std::to_string(n), opts));
      // 24 * count, to stay in integers for the real odd case.
      const std::size_t scaled = n % 2 == 0 ? (n + 2) * (n + 3) * (n + 4)
                                            : (n + 1) * (n + 3) * (n + 5) / (f == Q ? 2 : 1);
      r.require(cor4.tensors.size() * 24 == scaled && total == cor4.tensors.size(),
                "union count at n=" + std::to_string(n));
      if (f == C) complex_counts += (complex_counts.empty() ? "" : ", ") + std::to_string(cor4.tensors.size());
    }
    r.require(check_annihilation(n, opts));
  }
  if (r.ok) r.note = "n=2..4; complex counts " + complex_counts;
  return r;
}

Outcome criterion5() {
  Outcome r;
  r.require(check_golden_n2m2(audited()));
  return r;
}

Outcome criterion6() {
  Outcome r;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t l = (n + 1) / 2; l <= n; ++l) {
      for (auto f : {C, Q}) {
        const auto desc = ComponentDescriptor::of(n, l, f);
        const std::size_t s = 2 * l - n + 1;
        r.require(desc.expected_minimal_ideal_dim == (f == Q && n % 2 == 1 ? 2 * s : s), "descriptor");
        r.require(check_primitivity(theorem1_set(n, l, f), desc));
      }
    }
  }
  return r;
}

Outcome criterion7() {
  Outcome r;
  std::size_t pairs = 0;
  auto run = [&](AlgebraKind k, std::size_t n, std::size_t count) {
    r.require(check_oracle_random(k, n, count));
    pairs += count;
  };
  for (std::size_t n = 1; n <= 6; ++n) run(AlgebraKind::Re1, n, 36);
  for (std::size_t n = 1; n <= 5; ++n) run(H, n, 36);
  for (std::size_t n = 1; n <= 3; ++n) run(O, n, 36);
  r.require(pairs >= 500, "fewer than 500 random pairs");
  r.require(audit.checked > 0 && audit.beyond_bound == 0,
            std::to_string(audit.beyond_bound) + " structured products beyond the dense bound");
  std::ostringstream note;
  note << pairs << " random pairs, " << audit.checked << " structured products";
  if (r.ok) r.note = note.str();
  return r;
}

Outcome criterion8() {
  Outcome r;
  r.require(check_beta(10));
  return r;
}

Outcome criterion9() {
  Outcome r;
  for (std::size_t n : {2, 3}) {
    r.require(check_local_global(n, 8));
    r.require(check_zero_intersection('a', n));
  }
  r.require(check_zero_intersection('b', 2));
  return r;
}

Outcome criterion10() {
  Outcome r;
  // Perturbed coefficient.
  auto set = theorem1_set(3, 2, C);
  auto terms = set.tensors[1].terms();
  terms.begin()->second += GaussRational(1);
  set.tensors[1] = SymTensor(H, C, 3, terms);
  const auto perturbed = check_set(set, "perturbed");
  r.require(!perturbed.passed() && !perturbed.witnesses.empty(), "perturbed coefficient went unnoticed");

  // Flipped table sign, through the mutant CLI.
  const std::string cmd = std::string("\"") + SYMIDEM_MUTANT_CLI + "\" verify --profile quick --format json";
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  r.require(pipe != nullptr, "cannot start the mutant CLI");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.require(code == 3, "mutant CLI exited with " + std::to_string(code));
  std::size_t failed = 0;
  bool table = false, set_check = false;
  try {
    const Json report = Json::parse(output);
    for (const auto& x : report["results"]) {
      if (x["passed"].get<bool>()) continue;
      ++failed;
      const auto id = x["check_id"].get<std::string>();
      table = table || id == "table.octonion";
      set_check = set_check || id.rfind("thm3.set.", 0) == 0 || id.rfind("cor4.set.", 0) == 0;
    }
  } catch (const std::exception& e) {
    r.require(false, std::string("unreadable mutant report: ") + e.what());
  }
  r.require(table && set_check, "mutant did not fail the table and set checks");
  if (r.ok) r.note = "mutant build fails " + std::to_string(failed) + " checks incl. table.octonion; perturbed set rejected";
  return r;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"multiplication table fidelity", criterion1},
      {"central idempotent family and construction routes", criterion2},
      {"theorem1_set families and conjugate-pair cross-check", criterion3},
      {"theorem3_set / corollary4_set families and annihilation", criterion4},
      {"golden tau/rho fixtures", criterion5},
      {"primitivity by left ideal rank", criterion6},
      {"sparse product equals dense oracle", criterion7},
      {"beta identity and special values", criterion8},
      {"local-global and zero-intersection", criterion9},
      {"negative controls", criterion10},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [title, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << index << "  " << title << "  ["
              << std::fixed << std::setprecision(2) << secs << " s]";
    if (!o.note.empty()) std::cout << "  " << o.note;
    std::cout << std::endl;
  }
  return failures;
}
