#include "cylint/constraints.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "cylint/coefficients.hpp"
#include "cylint/hypergeometric.hpp"
#include "cylint/special.hpp"

namespace cylint {

namespace {

std::vector<BTable> tables_for(const ConstraintSystem& system) {
  std::vector<BTable> tables;
  tables.reserve(system.terms.size());
  for (const auto& t : system.terms) tables.push_back(expand_oracle(t.j, t.k));
  return tables;
}

// mu_1(rho) .. mu_count(rho), index m - 1.
std::vector<Rational> mu_values(const MuTable& mus, const Rational& rho,
                                int count) {
  const Rational rho2 = rho * rho;
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int m = 1; m <= count; ++m) out.push_back(mus[m].evaluate(rho2));
  return out;
}

Rational half_gap(const Rational& rho) {
  return (Rational(1) - rho * rho) / Rational(2);
}

void require_degenerate_row(const ConstraintSystem& system, int N) {
  if (system.terms.empty()) throw DomainError("constraint system has no terms");
  if (N < system.max_j()) {
    throw DomainError("degeneracy relation is only claimed for N >= max{j} = " +
                      std::to_string(system.max_j()) + ", got N=" +
                      std::to_string(N));
  }
  if (N > system.L()) {
    throw DomainError("N=" + std::to_string(N) + " exceeds L=" +
                      std::to_string(system.L()));
  }
}

// Witnesses for every N in [max_j, L], index N - max_j.
std::vector<std::vector<Rational>> all_witnesses(const ConstraintSystem& system) {
  const int L = system.L();
  const int lo = system.max_j();
  const MuTable mus(L);
  const std::vector<Rational> mu_in = mu_values(mus, system.rho_inner, L);
  const std::vector<Rational> mu_out = mu_values(mus, system.rho_outer, L);
  const Rational g_in = half_gap(system.rho_inner);
  const Rational g_out = half_gap(system.rho_outer);
  const auto width = static_cast<std::size_t>(L + 1);

  std::vector<std::vector<Rational>> w(static_cast<std::size_t>(L - lo + 1),
                                       std::vector<Rational>(width));
  for (int N = L; N >= lo; --N) {
    auto& row = w[static_cast<std::size_t>(N - lo)];
    row[static_cast<std::size_t>(N)] += Rational(1);
    for (int m = 1; m <= L - N; ++m) {
      const auto mi = static_cast<std::size_t>(m - 1);
      row[static_cast<std::size_t>(N + m)] += g_in * mu_in[mi];
      if (g_out.is_zero()) continue;
      const auto& higher = w[static_cast<std::size_t>(N + m - lo)];
      const Rational f = g_out * mu_out[mi];
      for (std::size_t c = 0; c < width; ++c) row[c] -= f * higher[c];
    }
  }
  return w;
}

}  // namespace

int ConstraintSystem::L() const {
  int out = 0;
  for (const auto& t : terms) out = std::max(out, t.j + t.k);
  return out;
}

int ConstraintSystem::max_j() const {
  int out = 0;
  for (const auto& t : terms) out = std::max(out, t.j);
  return out;
}

void ConstraintSystem::validate() const {
  if (terms.empty()) throw DomainError("constraint system has no terms");
  std::set<std::pair<int, int>> seen;
  for (const auto& t : terms) {
    if (t.j < 0 || t.k < 0) {
      throw DomainError("term indices must be nonnegative");
    }
    if (!seen.emplace(t.j, t.k).second) {
      throw DomainError("duplicate term (j, k) = (" + std::to_string(t.j) +
                        ", " + std::to_string(t.k) + ")");
    }
  }
  if (rho_inner.sign() <= 0) throw DomainError("rho_inner must be positive");
  if (!(rho_inner < rho_outer)) {
    throw DomainError("rho_inner (" + rho_inner.str() +
                      ") must be smaller than rho_outer (" + rho_outer.str() + ")");
  }
}

RationalMatrix assemble_A(const ConstraintSystem& system, const Rational& rho) {
  const int L = system.L();
  const Rational rho2 = rho * rho;
  const std::vector<BTable> tables = tables_for(system);
  RationalMatrix rows(static_cast<std::size_t>(L + 1),
                      std::vector<Rational>(system.terms.size()));
  for (std::size_t c = 0; c < tables.size(); ++c) {
    const BTable& t = tables[c];
    Rational weight(1);  // rho^(2(j+k-l)), built from l = j+k downwards
    for (int l = t.order(); l >= 0; --l) {
      rows[static_cast<std::size_t>(l)][c] = t.betas[static_cast<std::size_t>(l)] * weight;
      weight *= rho2;
    }
  }
  return rows;
}

std::vector<Rational> evaluate_A(const ConstraintSystem& system,
                                 const Rational& rho) {
  const RationalMatrix rows = assemble_A(system, rho);
  std::vector<Rational> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Rational acc;
    for (std::size_t c = 0; c < row.size(); ++c) acc += row[c] * system.terms[c].a;
    out.push_back(std::move(acc));
  }
  return out;
}

IdentityCheck check_degeneracy(const ConstraintSystem& system, int N) {
  require_degenerate_row(system, N);
  const int L = system.L();
  const MuTable mus(L - N);
  auto side = [&](const Rational& rho) {
    const std::vector<Rational> A = evaluate_A(system, rho);
    const std::vector<Rational> mu = mu_values(mus, rho, L - N);
    Rational sum;
    for (int m = 1; m <= L - N; ++m) {
      sum += mu[static_cast<std::size_t>(m - 1)] * A[static_cast<std::size_t>(N + m)];
    }
    return A[static_cast<std::size_t>(N)] + half_gap(rho) * sum;
  };
  return {side(system.rho_outer), side(system.rho_inner)};
}

std::vector<Rational> degeneracy_witness(const ConstraintSystem& system, int N) {
  require_degenerate_row(system, N);
  return all_witnesses(system)[static_cast<std::size_t>(N - system.max_j())];
}

std::string to_string(Radius r) { return r == Radius::inner ? "inner" : "outer"; }

std::string DedupReport::rank_status() const {
  return rank == predicted_independent ? "equal" : "below";
}

DedupReport dedup(const ConstraintSystem& system) {
  if (system.terms.empty()) throw DomainError("constraint system has no terms");
  const int L = system.L();
  const int max_j = system.max_j();
  const RationalMatrix inner = assemble_A(system, system.rho_inner);
  const RationalMatrix outer = assemble_A(system, system.rho_outer);

  RationalMatrix stacked = inner;
  stacked.insert(stacked.end(), outer.begin(), outer.end());

  DedupReport report;
  report.total_rows = static_cast<int>(stacked.size());
  report.rank = static_cast<int>(exact_rank(stacked));
  const int n_terms = static_cast<int>(system.terms.size());
  report.predicted_independent =
      std::min(n_terms, 2 * (L + 1) - (L - max_j + 1));

  const auto witnesses = all_witnesses(system);
  report.witnesses_verified = true;
  for (int N = max_j; N <= L; ++N) {
    report.redundant_rows.push_back({Radius::outer, N});
    const auto& w = witnesses[static_cast<std::size_t>(N - max_j)];
    for (std::size_t c = 0; c < system.terms.size(); ++c) {
      Rational combo;
      for (std::size_t l = 0; l < w.size(); ++l) {
        if (!w[l].is_zero()) combo += w[l] * inner[l][c];
      }
      if (combo != outer[static_cast<std::size_t>(N)][c]) {
        report.witnesses_verified = false;
      }
    }
  }
  if (!report.witnesses_verified) {
    throw ConsistencyError("degeneracy witness failed to reproduce an outer row");
  }
  if (report.rank > report.predicted_independent) {
    throw ConsistencyError("rank " + std::to_string(report.rank) +
                           " exceeds predicted bound " +
                           std::to_string(report.predicted_independent));
  }
  return report;
}

}  // namespace cylint
