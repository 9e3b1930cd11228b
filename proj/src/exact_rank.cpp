#include "weylsym/exact_rank.hpp"

#include <stdexcept>
#include <utility>

namespace weylsym {

std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();

  std::vector<std::vector<Integer>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    Integer scale = 1;
    for (const auto& q : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> ints(cols);
    for (std::size_t c = 0; c < cols; ++c) ints[c] = row[c].get_num() * (scale / row[c].get_den());
    m.push_back(std::move(ints));
  }

  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const Integer& p = m[rank][c];
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = p * m[r][j] - m[r][c] * m[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[r][j] = std::move(v);
      }
      m[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace weylsym
