#include "weylsym/multi_index.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace weylsym {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("multi-index position out of range");
  MultiIndex m(n);
  m.exps_[i] = 1;
  return m;
}

unsigned MultiIndex::total() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool MultiIndex::divides(const MultiIndex& other) const {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& other) {
  assert(other.divides(*this));
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] -= other.exps_[i];
  return *this;
}

std::size_t MultiIndex::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : exps_) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {
void fill_degree(std::size_t pos, unsigned left, MultiIndex& cur,
                 std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[pos] = e;
    fill_degree(pos + 1, left - e, cur, out);
  }
  cur[pos] = 0;
}
}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<MultiIndex> out;
  if (n == 0) return out;
  MultiIndex cur(n);
  fill_degree(0, d, cur, out);
  return out;
}

}  // namespace weylsym
