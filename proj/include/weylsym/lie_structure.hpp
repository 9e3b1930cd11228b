#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "weylsym/coefficient_family.hpp"
#include "weylsym/rational.hpp"
#include "weylsym/weyl_element.hpp"

namespace weylsym {

/// Structure constants C^k_{ij} of a Lie algebra in a fixed basis:
/// [X_i, X_j] = sum_k C^k_{ij} X_k. Indices are 0-based.
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t n);

  std::size_t dimension() const { return n_; }

  const Rational& operator()(std::size_t k, std::size_t i, std::size_t j) const {
    return data_[index(k, i, j)];
  }
  void set(std::size_t k, std::size_t i, std::size_t j, const Rational& value);

  /// Sets C^k_{ij} = value and C^k_{ji} = -value.
  void set_bracket(std::size_t k, std::size_t i, std::size_t j, const Rational& value);

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t index(std::size_t k, std::size_t i, std::size_t j) const {
    return (k * n_ + i) * n_ + j;
  }

  std::size_t n_;
  std::vector<Rational> data_;
};

struct Violation {
  enum class Kind { antisymmetry, jacobi };
  Kind kind;
  /// antisymmetry: (k, i, j); jacobi: (i, j, l, m). 0-based.
  std::vector<std::size_t> indices;
  Rational residual;

  std::string describe() const;  // 1-based indices
};

/// Empty iff C is antisymmetric in its lower indices and satisfies Jacobi.
std::vector<Violation> validate(const StructureConstants& sc);

/// n x n matrix with pure-d linear entries: C^i_j = sum_k C^i_{jk} d^k.
class CMatrix {
 public:
  explicit CMatrix(std::size_t n);

  static CMatrix identity(std::size_t n);

  std::size_t dimension() const { return n_; }
  const WeylElement& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  WeylElement& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<WeylElement> entries_;
};

CMatrix cmatrix(const StructureConstants& sc);
CMatrix cmatrix_power(const CMatrix& m, unsigned exponent);

/// Bernoulli number with B_1 = -1/2. Memoized; safe to call concurrently.
Rational bernoulli(unsigned index);

/// (-1)^N B_N / N!, the N-th coefficient of t / (1 - e^{-t}).
Rational embedding_coefficient(unsigned order);

/// The universal embedding of X_i, N-sum cut at N <= order.degree.
WeylElement iota(const StructureConstants& sc, std::size_t i, TruncationOrder order);

/// [iota(i), iota(j)] - sum_k C^k_{ij} iota(k), exact through d-degree
/// order.degree (operands are expanded one order higher).
WeylElement homomorphism_defect(const StructureConstants& sc, std::size_t i, std::size_t j,
                                TruncationOrder order);

/// p^{N-1,l}_{ij} = (-1)^N B_N / N! * sum_s (C^{N-1})^l_s C^s_{ij}, N = 1..max_order.
CoefficientFamily derived_family(const StructureConstants& sc, unsigned max_order);

}  // namespace weylsym
