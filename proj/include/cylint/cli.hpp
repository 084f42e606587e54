#ifndef CYLINT_CLI_HPP
#define CYLINT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cylint::cli {

/// Exit codes: success / identity violation / usage or domain error.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

/// Largest j, k, jmax, kmax or mu order the command line accepts.
inline constexpr int kIndexCap = 32;

struct CliConfig {
  std::string subcommand;
  int j = 0;
  int k = 0;
  int jmax = 10;
  int kmax = 10;
  int mmax = 1;
  std::string format = "json";
  std::string route = "oracle";
  std::uint64_t seed = 20090701;
  unsigned jobs = 1;
  bool lemmas = false;
  bool report = false;
  std::string rho;
  std::string s;
  std::optional<std::string> rho_inner;
  std::optional<std::string> rho_outer;
  std::string terms_path;
  std::string out_path;
};

/// Runs one command line. `args` excludes the program name. Normal output
/// goes to `out` (JSON lines or CSV), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cylint::cli

#endif  // CYLINT_CLI_HPP
