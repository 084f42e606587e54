#include "cylint/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cylint/coefficients.hpp"
#include "cylint/constraints.hpp"
#include "cylint/hypergeometric.hpp"
#include "cylint/identities.hpp"
#include "cylint/serialization.hpp"
#include "cylint/special.hpp"

namespace cylint::cli {

namespace {

Rational parse_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const RationalParseError& e) {
    throw DomainError(flag + ": " + e.what());
  }
}

int cmd_coeffs(const CliConfig& cfg, std::ostream& out) {
  const BTable table =
      cfg.route == "sum" ? b_table_sum(cfg.j, cfg.k) : expand_oracle(cfg.j, cfg.k);
  if (cfg.format == "csv") {
    write_btable_csv(out, table);
  } else {
    out << Json(table).dump() << '\n';
  }
  return kOk;
}

int cmd_mu(const CliConfig& cfg, std::ostream& out) {
  for (int m = 1; m <= cfg.mmax; ++m) out << Json(mu(m)).dump() << '\n';
  return kOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const SweepResult sweep = sweep_theorem(cfg.jmax, cfg.kmax, cfg.jobs);
  if (cfg.report) {
    for (const auto& r : sweep.reports) out << Json(r).dump() << '\n';
  }
  if (!sweep.ok()) {
    const TheoremReport& f = *sweep.first_failure;
    err << "theorem violated at (j, k, N) = (" << f.j << ", " << f.k << ", "
        << f.N << "): residual " << Json(f.residual).dump() << ", expected "
        << f.closed_form_constant << '\n';
    return kViolation;
  }
  err << "theorem: " << sweep.reports.size()
      << " (j, k, N) tuples constant and equal to the closed form\n";

  if (cfg.lemmas) {
    LemmaSweepConfig lc;
    lc.seed = cfg.seed;
    for (const auto& [name, result] :
         {std::pair{"lemma1", sweep_lemma1(lc)}, std::pair{"lemma2", sweep_lemma2(lc)}}) {
      if (!result.ok()) {
        err << *result.first_failure << " violated\n";
        return kViolation;
      }
      err << name << ": " << result.checks << " instances exact\n";
    }
  }
  return kOk;
}

int cmd_dedup(const CliConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.terms_path);
  if (!in) throw DomainError("cannot open terms file '" + cfg.terms_path + "'");
  ConstraintSystem system = Json::parse(in).get<ConstraintSystem>();
  if (cfg.rho_inner) system.rho_inner = parse_flag("--rho-inner", *cfg.rho_inner);
  if (cfg.rho_outer) system.rho_outer = parse_flag("--rho-outer", *cfg.rho_outer);
  system.validate();
  for (const auto& t : system.terms) {
    if (t.j > kIndexCap || t.k > kIndexCap) {
      throw DomainError("term indices are capped at " + std::to_string(kIndexCap));
    }
  }
  const std::string doc = Json(dedup(system)).dump();
  if (cfg.out_path.empty()) {
    out << doc << '\n';
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) throw DomainError("cannot write '" + cfg.out_path + "'");
    file << doc << '\n';
  }
  return kOk;
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  const Rational rho = parse_flag("--rho", cfg.rho);
  const Rational s = parse_flag("--s", cfg.s);
  if (s.sign() < 0 || s > rho) {
    throw DomainError("eval requires 0 <= s <= rho, got rho=" + rho.str() +
                      " s=" + s.str());
  }
  const BTable table = expand_oracle(cfg.j, cfg.k);
  Json doc{{"j", cfg.j},
           {"k", cfg.k},
           {"rho", rho},
           {"s", s},
           {"P", table.reduced_integral(rho, s)},
           {"rho2_minus_s2", rho * rho - s * s}};
  out << doc.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact coefficient tables and hypergeometric identities for "
               "cylinder-sphere integrals",
               "cylint"};
  app.require_subcommand(1);
  const auto index_range = CLI::Range(0, kIndexCap);

  auto* coeffs = app.add_subcommand("coeffs", "B_l coefficient table of I_jk");
  coeffs->add_option("--j", cfg.j, "z exponent index j")->required()->check(index_range);
  coeffs->add_option("--k", cfg.k, "(z^2+s^2) exponent k")->required()->check(index_range);
  coeffs->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  coeffs->add_option("--route", cfg.route, "oracle (direct expansion) or sum")
      ->check(CLI::IsMember({"oracle", "sum"}));

  auto* mu_cmd = app.add_subcommand("mu", "multiplier polynomials mu_1..mu_max");
  mu_cmd->add_option("--max", cfg.mmax)->required()->check(CLI::Range(1, kIndexCap));

  auto* verify = app.add_subcommand("verify", "exact theorem and lemma sweeps");
  verify->add_option("--jmax", cfg.jmax)->check(index_range);
  verify->add_option("--kmax", cfg.kmax)->check(index_range);
  verify->add_flag("--lemmas", cfg.lemmas, "also run the binomial-sum lemma sweeps");
  verify->add_flag("--report", cfg.report, "emit one JSON line per (j, k, N)");
  verify->add_option("--jobs", cfg.jobs)->check(CLI::Range(1u, 256u));
  verify->add_option("--seed", cfg.seed, "seed for lemma sampling");

  auto* dedup_cmd = app.add_subcommand("dedup", "count independent constraint rows");
  dedup_cmd->add_option("--terms", cfg.terms_path, "JSON term file")->required();
  dedup_cmd->add_option("--rho-inner", cfg.rho_inner);
  dedup_cmd->add_option("--rho-outer", cfg.rho_outer);
  dedup_cmd->add_option("--out", cfg.out_path, "output file (default stdout)");

  auto* eval = app.add_subcommand("eval", "I_jk = sqrt(rho^2-s^2) * P");
  eval->add_option("--j", cfg.j)->required()->check(index_range);
  eval->add_option("--k", cfg.k)->required()->check(index_range);
  eval->add_option("--rho", cfg.rho)->required();
  eval->add_option("--s", cfg.s)->required();

  std::vector<const char*> argv{"cylint"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "coeffs") return cmd_coeffs(cfg, out);
    if (cfg.subcommand == "mu") return cmd_mu(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out, err);
    if (cfg.subcommand == "dedup") return cmd_dedup(cfg, out);
    return cmd_eval(cfg, out);
  } catch (const ConsistencyError& e) {
    err << "identity violation: " << e.what() << '\n';
    return kViolation;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace cylint::cli
