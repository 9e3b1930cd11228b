#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "weylsym/coefficient_family.hpp"
#include "weylsym/random.hpp"
#include "weylsym/weyl_element.hpp"

namespace weylsym {

/// Seeded antisymmetric family. Each coefficient with i < j is drawn with
/// probability `density` from the small-rational pool and mirrored with a
/// sign flip; diagonal entries stay empty.
CoefficientFamily random_family(std::size_t n, unsigned max_order, const Rational& density,
                                std::uint64_t seed);

/// The generalized generators X_i = x_i + sum_{l,N,j} x_l p^{N-1,l}_{ij}(d) d^j,
/// with N cut at min(max_order, order.degree).
struct GeneratorSet {
  std::vector<WeylElement> X;
  CoefficientFamily family;
  TruncationOrder order;

  std::size_t dimension() const { return family.dimension(); }
};

GeneratorSet build_generators(const CoefficientFamily& family, TruncationOrder order);

/// A word alpha: {1..k} -> {1..n}, stored 0-based.
class WordSpec {
 public:
  /// Throws std::invalid_argument if letters is empty or a letter is >= n.
  WordSpec(std::size_t n, std::vector<std::size_t> letters);

  std::size_t length() const { return letters_.size(); }
  std::size_t dimension() const { return n_; }
  const std::vector<std::size_t>& letters() const { return letters_; }

  /// Commutative monomial x_{alpha(1)} ... x_{alpha(k)}.
  MultiIndex monomial() const;

  static WordSpec random(std::size_t n, std::size_t k, Rng& rng);

 private:
  std::size_t n_;
  std::vector<std::size_t> letters_;
};

struct SymmetrizedProduct {
  WeylElement value;
  /// False when the generators' truncation order is below k - 1, so the
  /// vacuum image of `value` is not guaranteed exact.
  bool truncation_sufficient;
};

/// sum over all k! orderings of X_{alpha(sigma(1))} ... X_{alpha(sigma(k))}.
/// Distinct orderings of repeated letters are enumerated once and weighted by
/// the multiplicity factorials.
SymmetrizedProduct symmetrized_product(const GeneratorSet& g, const WordSpec& w);

/// Reference version: literally all k! permutations of the positions.
WeylElement symmetrized_product_naive(const GeneratorSet& g, const WordSpec& w);

/// The permutation sum applied to the vacuum, evaluated right to left:
/// F(M) = sum_a mult(a) X_a |> F(M - a) over sub-multisets M of the word.
/// Equal to fock_apply(symmetrized_product(g, w).value, 1).
Polynomial symmetrized_vacuum_image(const GeneratorSet& g, const WordSpec& w);

struct TheoremReport {
  bool passed;
  bool truncation_sufficient;
  Polynomial lhs;       // permutation sum |> 1
  Polynomial expected;  // k! x_{alpha(1)} ... x_{alpha(k)}
  Polynomial residual;  // lhs - expected
};

enum class EvaluationRoute {
  vacuum,    // symmetrized_vacuum_image
  operator_  // fock_apply(symmetrized_product(...), 1)
};

/// Exact check of sum_sigma X_{alpha_sigma(1)} ... X_{alpha_sigma(k)} |> 1
/// = k! x_{alpha_1} ... x_{alpha_k}.
TheoremReport theorem_check(const GeneratorSet& g, const WordSpec& w,
                            EvaluationRoute route = EvaluationRoute::vacuum);

/// Per-i summands of sum_i sum_s p^{N-1,l}_{alpha(i) s}(d) d^s |> prod_{r != i} x_{alpha(r)}.
/// l is 0-based, N (order) is 1-based.
std::vector<Polynomial> cancellation_contributions(const CoefficientFamily& fam, const WordSpec& w,
                                                   std::size_t l, unsigned order);

/// Sum of cancellation_contributions; zero whenever the family is antisymmetric.
Polynomial cancellation_check(const CoefficientFamily& fam, const WordSpec& w, std::size_t l,
                              unsigned order);

/// Linear extension of x^alpha -> sum_sigma X_{alpha_sigma(1)} ... X_{alpha_sigma(k)}
/// (alpha monotone).
///
/// Only the exactly known part of the image is returned: terms of d-degree up
/// to g.order + 1 - deg(p). Higher terms depend on the generators' dropped
/// tails. Throws std::invalid_argument when g.order < deg(p) - 1.
WeylElement e_tilde(const Polynomial& p, const GeneratorSet& g);

/// e_tilde with each k-homogeneous component divided by k!.
WeylElement e_map(const Polynomial& p, const GeneratorSet& g);

/// Vacuum projection a |> 1. Computed both by the Fock action and by reading
/// off the d-free terms; throws std::logic_error if they disagree.
Polynomial pi_project(const WeylElement& a);

struct SpanDimension {
  std::size_t words;      // rank of the n^k degree-k words
  std::size_t symmetric;  // binomial(n + k - 1, k)
  unsigned compared_degree;
};

/// Rank of {X_{w_1} ... X_{w_k}} over all n^k words, compared on terms of
/// d-degree <= order - (k - 1), where every product is exact. Throws
/// std::invalid_argument when g.order < k - 1.
SpanDimension span_dimension(const GeneratorSet& g, std::size_t k);

}  // namespace weylsym
