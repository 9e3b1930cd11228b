#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace weylsym {

/// Exponent vector of length n for a monomial in n commuting symbols.
class MultiIndex {
 public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  MultiIndex(std::initializer_list<value_type> exps) : exps_(exps) {}
  explicit MultiIndex(std::vector<value_type> exps) : exps_(std::move(exps)) {}

  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const { return exps_.size(); }
  value_type operator[](std::size_t i) const { return exps_[i]; }
  value_type& operator[](std::size_t i) { return exps_[i]; }

  unsigned total() const;
  bool is_zero() const { return total() == 0; }

  /// Componentwise a <= b.
  bool divides(const MultiIndex& other) const;

  const std::vector<value_type>& exponents() const { return exps_; }

  MultiIndex& operator+=(const MultiIndex& other);
  /// Componentwise subtraction; requires other.divides(*this).
  MultiIndex& operator-=(const MultiIndex& other);

  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

  std::size_t hash() const;

 private:
  std::vector<value_type> exps_;
};

/// All multi-indices of length n and total degree d, in lexicographically
/// decreasing order of exponents (x1^d first).
std::vector<MultiIndex> monomials_of_degree(std::size_t n, unsigned d);

}  // namespace weylsym
