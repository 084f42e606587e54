#include "cylint/identities.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cylint/sampling.hpp"
#include "cylint/special.hpp"

namespace cylint {

namespace {

void require_residual_index(int j, int k, int N) {
  if (j < 0 || k < 0) throw DomainError("indices must be nonnegative");
  if (N < 0 || N > j + k) {
    throw std::out_of_range("N=" + std::to_string(N) + " outside 0.." +
                            std::to_string(j + k));
  }
}

EvenPoly multiplier_sum(const BTable& table, const MuTable& mus, int N) {
  EvenPoly sum;
  for (int m = 1; m <= table.order() - N; ++m) {
    sum += mus[m] * table.b_poly(N + m);
  }
  return sum;
}

std::string tuple_text(const Rational& a, int b, int n) {
  return "(" + a.str() + ", " + std::to_string(b) + ", " + std::to_string(n) + ")";
}

}  // namespace

IdentityCheck verify_lemma1(const Rational& alpha, int beta, int n) {
  if (n < 0) throw DomainError("verify_lemma1: n must be nonnegative");
  if (beta + n < 0) {
    throw DomainError("verify_lemma1: lower index beta+n=" +
                      std::to_string(beta + n) + " is negative");
  }
  const auto lower = static_cast<unsigned>(beta + n);
  Rational lhs;
  for (int i = 0; i <= n; ++i) {
    Rational term = gen_binomial(alpha + Rational(i), lower) *
                    Rational(binomial(static_cast<unsigned long>(n),
                                      static_cast<unsigned long>(i)));
    if ((n + i) % 2 == 1) term = -term;
    lhs += term;
  }
  const Rational rhs =
      beta < 0 ? Rational() : gen_binomial(alpha, static_cast<unsigned>(beta));
  return {lhs, rhs};
}

IdentityCheck verify_lemma2(const Rational& beta, int n) {
  if (n < 0) throw DomainError("verify_lemma2: n must be nonnegative");
  for (int i = 0; i <= n; ++i) {
    if ((beta + Rational(i)).is_zero()) {
      throw PoleError("verify_lemma2: beta+" + std::to_string(i) + " = 0");
    }
  }
  Rational lhs;
  for (int i = 0; i <= n; ++i) {
    lhs += half_binom(static_cast<unsigned>(n - i)) *
           half_binom(static_cast<unsigned>(i)) / (beta + Rational(i));
  }
  const auto un = static_cast<unsigned>(n);
  const Rational rhs = pochhammer(beta + Rational(1, 2), un) /
                       (beta * pochhammer(beta + Rational(1), un));
  return {lhs, rhs};
}

Rational closed_form_constant(int j, int k, int N) {
  require_residual_index(j, k, N);
  SqrtPiScaled v = gamma_exact(HalfInteger::plus_half(k + j - N)) *
                   gamma_exact(HalfInteger::whole(k + 1)) *
                   gamma_exact(HalfInteger::plus_half(j)) /
                   (SqrtPiScaled(Rational(2), 1) *
                    gamma_exact(HalfInteger::whole(k + j + 1 - N)) *
                    gamma_exact(HalfInteger::plus_half(k + j + 1)));
  if (j % 2 == 1) v *= Rational(-1);
  return v.to_rational();
}

Rational nu_constant(int j, int k, int N) {
  return Rational(2) * closed_form_constant(j, k, N);
}

bool TheoremReport::holds() const {
  if (!hypothesis_applies()) return true;
  return is_constant && constant && *constant == closed_form_constant;
}

TheoremReport theorem_residual(const BTable& table, const MuTable& mus, int N) {
  require_residual_index(table.j, table.k, N);
  const EvenPoly half_gap = EvenPoly::one_minus_rho2().scaled(Rational(1, 2));
  TheoremReport report;
  report.j = table.j;
  report.k = table.k;
  report.N = N;
  report.residual = table.b_poly(N) + half_gap * multiplier_sum(table, mus, N);
  report.constant = is_constant(report.residual);
  report.is_constant = report.constant.has_value();
  report.closed_form_constant = closed_form_constant(table.j, table.k, N);
  return report;
}

TheoremReport theorem_residual(int j, int k, int N) {
  require_residual_index(j, k, N);
  return theorem_residual(expand_oracle(j, k), MuTable(j + k - N), N);
}

std::vector<Rational> nu_sequence(const BTable& table, const MuTable& mus,
                                  int N) {
  require_residual_index(table.j, table.k, N);
  const EvenPoly sum = multiplier_sum(table, mus, N);
  std::vector<Rational> nu(static_cast<std::size_t>(table.order() - N));
  for (std::size_t b = 0; b < nu.size(); ++b) nu[b] = sum.coeff(b);
  return nu;
}

std::vector<Rational> nu_sequence(int j, int k, int N) {
  require_residual_index(j, k, N);
  return nu_sequence(expand_oracle(j, k), MuTable(j + k - N), N);
}

IdentityCheck verify_succinct_form(int j, int k, int N, const Rational& rho2) {
  require_residual_index(j, k, N);
  if (N < j) {
    throw DomainError("verify_succinct_form requires N >= j");
  }
  const Rational mu0 = mu_zero_value(rho2);
  const BTable table = expand_oracle(j, k);
  const MuTable mus(j + k - N);
  Rational sum = mu0 * table.b_poly(N).evaluate(rho2);
  for (int m = 1; m <= j + k - N; ++m) {
    sum += mus[m].evaluate(rho2) * table.b_poly(N + m).evaluate(rho2);
  }
  const Rational succinct = (Rational(1) - rho2) / Rational(2) * sum;
  return {succinct, theorem_residual(table, mus, N).residual.evaluate(rho2)};
}

IdentityCheck check_radius_relation(int j, int k, int N, const Rational& rho) {
  require_residual_index(j, k, N);
  const BTable table = expand_oracle(j, k);
  const MuTable mus(j + k - N);
  const TheoremReport report = theorem_residual(table, mus, N);
  return {table.betas[static_cast<std::size_t>(N)],
          report.residual.evaluate(rho * rho)};
}

SweepResult sweep_theorem(int jmax, int kmax, unsigned jobs,
                          bool include_below_j) {
  if (jmax < 0 || kmax < 0) throw DomainError("sweep bounds must be nonnegative");
  struct Task {
    int j, k, N;
  };
  std::vector<Task> tasks;
  for (int j = 0; j <= jmax; ++j) {
    for (int k = 0; k <= kmax; ++k) {
      for (int N = include_below_j ? 0 : j; N <= j + k; ++N) {
        tasks.push_back({j, k, N});
      }
    }
  }

  const MuTable mus(jmax + kmax);
  std::vector<std::optional<TheoremReport>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  auto worker = [&] {
    // Consecutive tasks share (j, k), so keep the last table around.
    std::optional<BTable> table;
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      const Task& t = tasks[i];
      if (!table || table->j != t.j || table->k != t.k) {
        table = expand_oracle(t.j, t.k);
      }
      slots[i] = theorem_residual(*table, mus, t.N);
      if (!slots[i]->holds()) failed.store(true);
    }
  };

  const unsigned n_workers = std::max(1u, jobs);
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }

  SweepResult result;
  for (auto& slot : slots) {
    if (!slot) continue;
    if (!result.first_failure && !slot->holds()) result.first_failure = *slot;
    result.reports.push_back(std::move(*slot));
  }
  return result;
}

LemmaSweepResult sweep_lemma1(const LemmaSweepConfig& config) {
  Rng rng(config.seed);
  LemmaSweepResult result;
  for (int s = 0; s < config.samples; ++s) {
    const Rational alpha = random_rational(rng, config.bound);
    for (int beta = config.beta_min; beta <= config.beta_max; ++beta) {
      for (int n = std::max(0, -beta); n <= config.nmax; ++n) {
        ++result.checks;
        if (!verify_lemma1(alpha, beta, n).holds()) {
          result.first_failure = "lemma1 (alpha, beta, n) = " +
                                 tuple_text(alpha, beta, n);
          return result;
        }
      }
    }
  }
  return result;
}

LemmaSweepResult sweep_lemma2(const LemmaSweepConfig& config) {
  Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  LemmaSweepResult result;
  for (int s = 0; s < config.samples; ++s) {
    const Rational beta = random_positive_rational(rng, config.bound);
    for (int n = 0; n <= config.nmax; ++n) {
      ++result.checks;
      if (!verify_lemma2(beta, n).holds()) {
        result.first_failure = "lemma2 (beta, n) = (" + beta.str() + ", " +
                               std::to_string(n) + ")";
        return result;
      }
    }
  }
  return result;
}

}  // namespace cylint
