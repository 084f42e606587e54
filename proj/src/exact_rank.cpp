#include "cylint/exact_rank.hpp"

#include <stdexcept>
#include <utility>

namespace cylint {

std::size_t exact_rank(const RationalMatrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t n_cols = rows.front().size();

  std::vector<std::vector<Integer>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != n_cols) throw std::invalid_argument("ragged matrix");
    Integer scale = 1;
    for (const auto& x : row) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.mpq().get_den_mpz_t());
    }
    std::vector<Integer> ints;
    ints.reserve(n_cols);
    for (const auto& x : row) {
      ints.push_back(x.mpq().get_num() * (scale / x.mpq().get_den()));
    }
    m.push_back(std::move(ints));
  }

  const std::size_t n_rows = m.size();
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < n_cols && rank < n_rows; ++col) {
    std::size_t best = n_rows;
    for (std::size_t r = rank; r < n_rows; ++r) {
      if (m[r][col] == 0) continue;
      if (best == n_rows || mpz_cmpabs(m[r][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0) best = r;
    }
    if (best == n_rows) continue;
    std::swap(m[rank], m[best]);

    const Integer& pivot = m[rank][col];
    for (std::size_t r = rank + 1; r < n_rows; ++r) {
      const Integer factor = m[r][col];
      for (std::size_t c = col + 1; c < n_cols; ++c) {
        Integer v = pivot * m[r][c] - factor * m[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        m[r][c] = std::move(v);
      }
      m[r][col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace cylint
