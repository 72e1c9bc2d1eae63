#include "symidem/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "symidem/errors.hpp"
#include "symidem/idempotents.hpp"
#include "symidem/json_io.hpp"

namespace symidem::cli {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int emit(const CliConfig& config, const std::string& body, std::ostream& out, std::ostream& err) {
  if (!config.out) {
    out << body;
    return kExitOk;
  }
  std::ofstream file(*config.out, std::ios::binary);
  if (!file || !(file << body)) {
    err << "error: cannot write " << *config.out << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

std::string describe(const IdempotentLabel& l) {
  std::ostringstream s;
  s << to_string(l.family) << " n=" << l.n;
  if (l.m) s << " m=" << *l.m;
  if (l.ell) s << " ell=" << *l.ell;
  if (l.k) s << " k=" << *l.k;
  if (l.delta) s << " delta=" << (*l.delta > 0 ? "+1" : "-1");
  return s.str();
}

// Closed forms, computed independently of the per-index counts.
struct ClosedForm {
  std::size_t numerator;
  std::size_t denominator;
  std::string formula;
};

ClosedForm corollary2_closed(std::size_t n, FieldTag field) {
  if (n % 2 == 0) return {(n + 2) * (n + 2), 4, "(n+2)^2/4"};
  if (field == FieldTag::GaussianComplex) return {(n + 1) * (n + 3), 4, "(n+1)(n+3)/4"};
  return {(n + 1) * (n + 3), 8, "(n+1)(n+3)/8"};
}

ClosedForm corollary4_closed(std::size_t n, FieldTag field) {
  if (n % 2 == 0) return {(n + 2) * (n + 3) * (n + 4), 24, "(n+2)(n+3)(n+4)/24"};
  if (field == FieldTag::GaussianComplex) return {(n + 1) * (n + 3) * (n + 5), 24, "(n+1)(n+3)(n+5)/24"};
  return {(n + 1) * (n + 3) * (n + 5), 48, "(n+1)(n+3)(n+5)/48"};
}

bool within(AlgebraKind kind, std::size_t n, std::size_t bound) {
  std::size_t total = 1;
  for (std::size_t p = 0; p < n; ++p) {
    total *= dimension(kind);
    if (total > bound) return false;
  }
  return true;
}

std::string scope_name(AlgebraKind kind) { return kind == AlgebraKind::Octonion ? "o" : "h"; }

}  // namespace

std::size_t default_dense_bound() {
  if (const char* env = std::getenv("SYMIDEM_DENSE_BOUND")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::optional<CliConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  CliConfig config;
  config.dense_bound = default_dense_bound();
  std::string algebra = "h", field = "rational", profile = "quick", format = "text";

  CLI::App app{"Idempotents of symmetric tensor powers of composition algebras", "symidem"};
  app.require_subcommand(1);
  auto* construct = app.add_subcommand("construct", "Emit a complete set of orthogonal idempotents as JSON");
  auto* verify = app.add_subcommand("verify", "Run the verification suite or check a fixture");
  auto* dims = app.add_subcommand("dims", "Tabulate closed-form and realized counts");

  const std::map<std::string, std::string> algebras{{"h", "h"}, {"o", "o"}};
  const std::map<std::string, std::string> fields{
      {"rational", "rational"}, {"gaussian", "gaussian"}, {"real", "rational"}, {"complex", "gaussian"}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", config.out, "Write the output to this file");
  };

  construct->add_option("--algebra", algebra, "h (sets in Sym^n H) or o (sets in Sym^n H . e_{m,O})")
      ->transform(CLI::CheckedTransformer(algebras));
  construct->add_option("--field", field, "rational or gaussian")->transform(CLI::CheckedTransformer(fields));
  construct->add_option("--n", config.n, "Tensor degree")->required()->check(CLI::PositiveNumber);
  auto* ell_opt = construct->add_option("--ell", config.ell, "Component index for --algebra h");
  auto* m_opt = construct->add_option("--m", config.m, "Component index for --algebra o");
  ell_opt->excludes(m_opt);
  add_format(construct);

  verify->add_option("--profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--dense-bound", config.dense_bound, "Largest dense dimension d^n for oracle and rank work")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "Seed for sampled elements");
  verify->add_option("--fixture", config.fixture, "Check a constructed set read from this JSON file");
  verify->add_flag("--timings", config.timings, "Include per-check timings");
  add_format(verify);

  dims->add_option("--n", config.n, "Tensor degree")->required()->check(CLI::PositiveNumber);
  dims->add_option("--dense-bound", config.dense_bound, "Realize counts only while d^n is within this bound")
      ->check(CLI::PositiveNumber);
  add_format(dims);

  std::vector<const char*> argv{"symidem"};
  for (const auto& a : args) argv.push_back(a.c_str());
  bool format_given = false;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    for (auto* sub : {construct, verify, dims}) {
      if (sub->parsed() && sub->count("--format") > 0) format_given = true;
    }
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    return std::nullopt;
  }

  if (construct->parsed()) config.command = Command::Construct;
  else if (verify->parsed()) config.command = Command::Verify;
  else config.command = Command::Dims;

  if (!format_given) format = config.command == Command::Construct ? "json" : "text";
  config.format = format == "json" ? Format::Json : Format::Text;
  config.profile = parse_profile(profile);
  config.algebra = parse_kind(algebra == "o" ? "octonion" : "quaternion");
  config.field = parse_field(field);

  if (config.command == Command::Construct) {
    if (config.algebra == AlgebraKind::Quaternion && config.m) {
      throw ArgumentError("--m selects an octonion component and requires --algebra o; use --ell for h");
    }
    if (config.algebra == AlgebraKind::Octonion && config.ell) {
      throw ArgumentError("--ell selects a quaternion component and requires --algebra h; use --m for o");
    }
    if (config.ell) theorem1_count(config.n, *config.ell, config.field);
    if (config.m) check_partition_index(config.n, *config.m, "m");
  }
  exit_code = kExitOk;
  return config;
}

int cmd_construct(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const bool octonion = config.algebra == AlgebraKind::Octonion;
  IdempotentSet set = octonion ? (config.m ? theorem3_set(config.n, *config.m, config.field)
                                           : corollary4_set(config.n, config.field))
                               : (config.ell ? theorem1_set(config.n, *config.ell, config.field)
                                             : corollary2_set(config.n, config.field));
  if (config.format == Format::Json) return emit(config, dump(to_json(set)), out, err);

  std::ostringstream text;
  text << set.tensors.size() << " idempotents in Sym^" << config.n << " "
       << (octonion ? "O" : "H") << " over " << to_string(config.field) << "\n";
  for (std::size_t i = 0; i < set.tensors.size(); ++i) {
    text << "  [" << i << "] " << describe(set.labels[i]) << "  (" << set.tensors[i].terms().size()
         << " terms)\n";
  }
  return emit(config, text.str(), out, err);
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.dense_bound = config.dense_bound;
  opts.seed = config.seed;

  std::vector<CheckResult> results;
  if (config.fixture) {
    std::ifstream in(*config.fixture, std::ios::binary);
    if (!in) {
      err << "error: cannot read " << *config.fixture << "\n";
      return kExitUsage;
    }
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ArgumentError(std::string("fixture is not valid JSON: ") + e.what());
    }
    results.push_back(check_set(set_from_json(j), "fixture", opts));
  } else {
    results = run_suite(config.profile, opts);
  }

  const SuiteSummary summary = summarize(results);
  const bool mandatory_skip = config.profile == Profile::Quick && summary.skipped > 0;
  const int code = summary.failed > 0 || mandatory_skip ? kExitFailure : kExitOk;

  std::ostringstream summary_line;
  summary_line << "summary: " << summary.passed << " passed, " << summary.failed << " failed, "
               << summary.skipped << " skipped\n";

  std::string body;
  if (config.format == Format::Json) {
    body = dump(report_json(results, config.profile, config.timings));
  } else {
    std::ostringstream text;
    text << "profile " << to_string(config.profile) << "\n";
    for (const auto& r : results) {
      text << (r.status == CheckStatus::Passed ? "PASS " : r.status == CheckStatus::Failed ? "FAIL " : "SKIP ")
           << r.check_id;
      if (!r.detail.empty()) text << "  " << r.detail;
      if (config.timings) {
        text << "  (" << std::fixed << std::setprecision(1)
             << std::chrono::duration<double, std::milli>(r.elapsed).count() << " ms)";
      }
      text << "\n";
    }
    text << summary_line.str();
    body = text.str();
  }
  const int written = emit(config, body, out, err);
  if (written != kExitOk) return written;
  if (config.out) {
    for (const auto& r : results) {
      if (r.status == CheckStatus::Failed) out << "FAIL " << r.check_id << "  " << r.detail << "\n";
    }
    out << summary_line.str();
  }
  if (mandatory_skip) err << "error: quick-profile checks were skipped; raise --dense-bound\n";
  return code;
}

int cmd_dims(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const std::size_t n = config.n;
  Json rows = Json::array();
  bool mismatch = false;
  for (FieldTag field : {FieldTag::RationalReal, FieldTag::GaussianComplex}) {
    for (AlgebraKind scope : {AlgebraKind::Quaternion, AlgebraKind::Octonion}) {
      const bool octonion = scope == AlgebraKind::Octonion;
      const ClosedForm cf = octonion ? corollary4_closed(n, field) : corollary2_closed(n, field);
      Json per_index = Json::array();
      for (std::size_t i = (n + 1) / 2; i <= n; ++i) {
        per_index.push_back({{octonion ? "m" : "ell", i},
                             {"count", octonion ? theorem3_count(n, i, field) : theorem1_count(n, i, field)}});
      }
      Json row = {{"field", to_string(field)},
                  {"scope", scope_name(scope)},
                  {"formula", cf.formula},
                  {"closed_form", cf.numerator % cf.denominator == 0 ? Json(cf.numerator / cf.denominator)
                                                                     : Json(std::to_string(cf.numerator) + "/" +
                                                                            std::to_string(cf.denominator))},
                  {"per_index", per_index}};
      const std::size_t tabulated = octonion ? corollary4_count(n, field) : corollary2_count(n, field);
      bool ok = cf.numerator == tabulated * cf.denominator;
      if (within(scope, n, config.dense_bound)) {
        const IdempotentSet set = octonion ? corollary4_set(n, field) : corollary2_set(n, field);
        row["realized"] = set.tensors.size();
        ok = ok && set.tensors.size() * cf.denominator == cf.numerator;
      } else {
        row["realized"] = nullptr;
      }
      row["match"] = ok;
      mismatch = mismatch || !ok;
      rows.push_back(std::move(row));
    }
  }

  std::string body;
  if (config.format == Format::Json) {
    body = dump({{"n", n}, {"rows", rows}});
  } else {
    std::ostringstream text;
    text << "n = " << n << "\n";
    text << std::left << std::setw(10) << "field" << std::setw(7) << "scope" << std::setw(22) << "formula"
         << std::setw(8) << "closed" << std::setw(10) << "realized" << "per-index\n";
    for (const auto& row : rows) {
      std::ostringstream idx;
      for (const auto& p : row["per_index"]) idx << p.begin().value().get<std::size_t>() << ":" << p["count"] << " ";
      text << std::setw(10) << row["field"].get<std::string>() << std::setw(7) << row["scope"].get<std::string>()
           << std::setw(22) << row["formula"].get<std::string>() << std::setw(8)
           << (row["closed_form"].is_string() ? row["closed_form"].get<std::string>() : row["closed_form"].dump())
           << std::setw(10) << (row["realized"].is_null() ? "-" : row["realized"].dump()) << idx.str()
           << (row["match"].get<bool>() ? "" : "  MISMATCH") << "\n";
    }
    body = text.str();
  }
  const int written = emit(config, body, out, err);
  if (written != kExitOk) return written;
  return mismatch ? kExitFailure : kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    int code = kExitOk;
    const auto config = parse_args(args, out, err, code);
    if (!config) return code;
    switch (config->command) {
      case Command::Construct: return cmd_construct(*config, out, err);
      case Command::Verify: return cmd_verify(*config, out, err);
      case Command::Dims: return cmd_dims(*config, out, err);
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace symidem::cli
