#include "weylsym/coefficient_family.hpp"

#include <stdexcept>

namespace weylsym {

CoefficientFamily::CoefficientFamily(std::size_t n, unsigned max_order)
    : n_(n), max_order_(max_order) {
  if (n == 0) throw std::invalid_argument("coefficient family dimension must be positive");
  if (max_order == 0) throw std::invalid_argument("coefficient family needs max order >= 1");
}

void CoefficientFamily::check_key(const FamilyKey& key) const {
  if (key.order < 1 || key.order > max_order_)
    throw std::invalid_argument("family order outside 1..max_order");
  if (key.l >= n_ || key.i >= n_ || key.j >= n_)
    throw std::invalid_argument("family index out of range");
  if (key.m.size() != n_ || key.m.total() != key.order - 1)
    throw std::invalid_argument("family monomial must have degree order-1");
}

void CoefficientFamily::set(const FamilyKey& key, const Rational& value) {
  check_key(key);
  if (value == 0)
    entries_.erase(key);
  else
    entries_[key] = value;
}

void CoefficientFamily::set_antisymmetric(const FamilyKey& key, const Rational& value) {
  if (key.i == key.j && value != 0)
    throw std::invalid_argument("antisymmetric family has zero diagonal");
  set(key, value);
  FamilyKey mirror = key;
  std::swap(mirror.i, mirror.j);
  set(mirror, -value);
}

Rational CoefficientFamily::get(const FamilyKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Rational(0) : it->second;
}

WeylElement CoefficientFamily::polynomial(unsigned order, std::size_t l, std::size_t i,
                                          std::size_t j) const {
  WeylElement out(n_);
  FamilyKey lo{order, l, i, j, MultiIndex(n_)};
  for (auto it = entries_.lower_bound(lo); it != entries_.end(); ++it) {
    const auto& k = it->first;
    if (k.order != order || k.l != l || k.i != i || k.j != j) break;
    out.add_term(Monomial{MultiIndex(n_), k.m}, it->second);
  }
  return out;
}

std::vector<FamilyKey> CoefficientFamily::antisymmetry_violations() const {
  std::vector<FamilyKey> bad;
  for (const auto& [key, value] : entries_) {
    FamilyKey mirror = key;
    std::swap(mirror.i, mirror.j);
    if (get(mirror) != -value) bad.push_back(key);
  }
  return bad;
}

}  // namespace weylsym
