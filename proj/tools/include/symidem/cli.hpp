#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symidem/algebra.hpp"
#include "symidem/verify.hpp"

namespace symidem::cli {

enum class Command { Construct, Verify, Dims };
enum class Format { Json, Text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

struct CliConfig {
  Command command = Command::Verify;
  AlgebraKind algebra = AlgebraKind::Quaternion;
  FieldTag field = FieldTag::RationalReal;
  std::size_t n = 0;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> m;
  Profile profile = Profile::Quick;
  Format format = Format::Text;
  std::size_t dense_bound = 4096;
  std::uint64_t seed = 0xC0FFEE;
  std::optional<std::string> out;
  std::optional<std::string> fixture;
  bool timings = false;
};

/// Dense bound default: SYMIDEM_DENSE_BOUND if set and valid, else 4096.
std::size_t default_dense_bound();

/// Parses and validates argv. Throws ArgumentError on bad ranges; help and
/// parse errors are reported through the returned exit code instead.
std::optional<CliConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& exit_code);

int cmd_construct(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_dims(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symidem::cli
