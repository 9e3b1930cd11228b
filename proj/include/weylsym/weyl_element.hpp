#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weylsym/multi_index.hpp"
#include "weylsym/rational.hpp"

namespace weylsym {

/// Normal-ordered monomial x^x_exp d^d_exp (all x's to the left).
struct Monomial {
  MultiIndex x;
  MultiIndex d;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Maximum retained d-degree of a truncated element of the completion.
struct TruncationOrder {
  unsigned degree = 0;
  friend auto operator<=>(const TruncationOrder&, const TruncationOrder&) = default;
};

/// Element of the n-th Weyl algebra in normal-ordered form.
///
/// Terms live in a hash map from monomial to coefficient. Zero coefficients
/// are never stored, so the zero element is the empty map and equality is
/// structural.
class WeylElement {
 public:
  using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

  explicit WeylElement(std::size_t n = 1);

  /// Generators and scalars. Indices are 0-based; throws std::out_of_range.
  static WeylElement x(std::size_t n, std::size_t i);
  static WeylElement d(std::size_t n, std::size_t j);
  static WeylElement scalar(std::size_t n, const Rational& c);
  static WeylElement term(std::size_t n, Monomial m, const Rational& c);

  std::size_t dimension() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;

  /// Accumulates c into the coefficient of m, erasing it if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  /// Terms sorted by (x, d) exponents; iteration order of the map is not
  /// stable, this is.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  /// Max total degree of the x (resp. d) exponents; -1 for zero.
  int x_degree() const;
  int d_degree() const;

  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator-=(const WeylElement& other);
  WeylElement& operator*=(const Rational& c);

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_dimension(const WeylElement& other) const;
  void check_monomial(const Monomial& m) const;

  std::size_t n_;
  TermMap terms_;
};

WeylElement operator+(WeylElement a, const WeylElement& b);
WeylElement operator-(WeylElement a, const WeylElement& b);
WeylElement operator-(WeylElement a);
WeylElement operator*(const Rational& c, WeylElement a);

/// Product in A_n, reduced with d^j x_i = x_i d^j + delta^j_i.
WeylElement operator*(const WeylElement& a, const WeylElement& b);

WeylElement add(const WeylElement& a, const WeylElement& b);
WeylElement scale(const Rational& c, const WeylElement& a);
WeylElement mul(const WeylElement& a, const WeylElement& b);
WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// Drops every term of d-degree above order.degree.
WeylElement truncate(const WeylElement& a, TruncationOrder order);

/// Commutative polynomial in x_1..x_n: a Weyl element without d's.
class Polynomial {
 public:
  explicit Polynomial(std::size_t n = 1) : elem_(n) {}
  /// Throws std::invalid_argument if any term carries a d.
  explicit Polynomial(WeylElement elem);

  static Polynomial one(std::size_t n);
  static Polynomial monomial(const MultiIndex& x, const Rational& c = 1);

  const WeylElement& element() const { return elem_; }
  std::size_t dimension() const { return elem_.dimension(); }
  bool is_zero() const { return elem_.is_zero(); }
  std::size_t size() const { return elem_.size(); }
  int degree() const { return elem_.x_degree(); }
  Rational coefficient(const MultiIndex& x) const;

  /// Accumulates c * x^exps.
  void add_term(const MultiIndex& x, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  WeylElement elem_;
};

/// Fock action: x_i multiplies, d^j differentiates.
Polynomial fock_apply(const WeylElement& a, const Polynomial& p);

/// Human-readable form with 1-based symbols, e.g. "1/2*x3*d2 + x1".
std::string to_string(const Monomial& m);
std::string to_string(const WeylElement& a);
std::string to_string(const Polynomial& p);

}  // namespace weylsym
