#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "weylsym/multi_index.hpp"
#include "weylsym/rational.hpp"
#include "weylsym/weyl_element.hpp"

namespace weylsym {

/// Index of one coefficient: the d-monomial `m` in p^{N-1,l}_{ij}.
/// Indices l, i, j are 0-based; order is 1-based as in the series.
struct FamilyKey {
  unsigned order;  // N >= 1
  std::size_t l;
  std::size_t i;
  std::size_t j;
  MultiIndex m;  // total degree N - 1

  friend bool operator==(const FamilyKey&, const FamilyKey&) = default;
  friend auto operator<=>(const FamilyKey&, const FamilyKey&) = default;
};

/// Family of homogeneous polynomials p^{N-1,l}_{ij}(d), N = 1..max_order.
///
/// The container enforces homogeneity and finite support on every write. It
/// does not enforce antisymmetry in (i, j): the counterexamples that show the
/// hypothesis is needed have to be representable. Use `antisymmetry_violations`
/// to check it.
class CoefficientFamily {
 public:
  CoefficientFamily(std::size_t n, unsigned max_order);

  std::size_t dimension() const { return n_; }
  unsigned max_order() const { return max_order_; }

  /// Overwrites one coefficient (zero erases). Throws std::invalid_argument
  /// on out-of-range indices or a monomial of the wrong degree.
  void set(const FamilyKey& key, const Rational& value);

  /// Sets key to value and its (i, j) mirror to -value.
  void set_antisymmetric(const FamilyKey& key, const Rational& value);

  Rational get(const FamilyKey& key) const;

  const std::map<FamilyKey, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// p^{N-1,l}_{ij} as a pure-d element of A_n.
  WeylElement polynomial(unsigned order, std::size_t l, std::size_t i, std::size_t j) const;

  /// Keys whose mirror coefficient is not the negative (diagonal keys included).
  std::vector<FamilyKey> antisymmetry_violations() const;
  bool is_antisymmetric() const { return antisymmetry_violations().empty(); }

  friend bool operator==(const CoefficientFamily&, const CoefficientFamily&) = default;

 private:
  void check_key(const FamilyKey& key) const;

  std::size_t n_;
  unsigned max_order_;
  std::map<FamilyKey, Rational> entries_;
};

}  // namespace weylsym
