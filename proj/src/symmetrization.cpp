#include "weylsym/symmetrization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "weylsym/exact_rank.hpp"

namespace weylsym {

CoefficientFamily random_family(std::size_t n, unsigned max_order, const Rational& density,
                                std::uint64_t seed) {
  CoefficientFamily fam(n, max_order);
  Rng rng(seed);
  for (unsigned order = 1; order <= max_order; ++order) {
    const auto monomials = monomials_of_degree(n, order - 1);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          for (const auto& m : monomials)
            if (rng.chance(density)) fam.set_antisymmetric({order, l, i, j, m}, rng.small_rational());
  }
  return fam;
}

GeneratorSet build_generators(const CoefficientFamily& family, TruncationOrder order) {
  const std::size_t n = family.dimension();
  GeneratorSet g{{}, family, order};
  g.X.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.X.push_back(WeylElement::x(n, i));
  for (const auto& [key, value] : family.entries()) {
    if (key.order > order.degree) continue;
    g.X[key.i].add_term(Monomial{MultiIndex::unit(n, key.l), key.m + MultiIndex::unit(n, key.j)},
                        value);
  }
  return g;
}

WordSpec::WordSpec(std::size_t n, std::vector<std::size_t> letters)
    : n_(n), letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("word must have at least one letter");
  for (auto a : letters_)
    if (a >= n_) throw std::invalid_argument("word letter out of range");
}

MultiIndex WordSpec::monomial() const {
  MultiIndex m(n_);
  for (auto a : letters_) ++m[a];
  return m;
}

WordSpec WordSpec::random(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> letters(k);
  for (auto& a : letters) a = static_cast<std::size_t>(rng.below(n));
  return WordSpec(n, std::move(letters));
}

namespace {

bool exact_for_length(const GeneratorSet& g, std::size_t k) {
  // Every term of the generators with d-degree N <= order survives; the vacuum
  // image of a k-fold product only sees N <= k - 1.
  return g.order.degree + 1 >= k || g.order.degree >= g.family.max_order();
}

std::vector<unsigned> letter_counts(const GeneratorSet& g, const std::vector<std::size_t>& letters) {
  std::vector<unsigned> counts(g.dimension(), 0);
  for (auto a : letters) ++counts[a];
  return counts;
}

Integer multiplicity_weight(const std::vector<unsigned>& counts) {
  Integer w = 1;
  for (auto c : counts) w *= factorial(c);
  return w;
}

// Sum of all distinct orderings of the multiset `counts`, appended to prefix.
// With a window, only terms of d-degree <= *window are kept in the result; a
// prefix may carry `remaining` extra degrees since each later factor (x-degree
// 1 per term) removes at most one d by contraction.
void distinct_orderings(const GeneratorSet& g, const WeylElement& prefix,
                        std::vector<unsigned>& counts, unsigned remaining,
                        std::optional<unsigned> window, WeylElement& out) {
  if (remaining == 0) {
    out += prefix;
    return;
  }
  for (std::size_t a = 0; a < counts.size(); ++a) {
    if (counts[a] == 0) continue;
    --counts[a];
    WeylElement next = prefix * g.X[a];
    if (window) next = truncate(next, TruncationOrder{*window + remaining - 1});
    distinct_orderings(g, next, counts, remaining - 1, window, out);
    ++counts[a];
  }
}

WeylElement permutation_sum(const GeneratorSet& g, const std::vector<std::size_t>& letters,
                            std::optional<unsigned> window = std::nullopt) {
  const std::size_t n = g.dimension();
  auto counts = letter_counts(g, letters);
  const Integer weight = multiplicity_weight(counts);
  WeylElement out(n);
  distinct_orderings(g, WeylElement::scalar(n, 1), counts,
                     static_cast<unsigned>(letters.size()), window, out);
  out *= Rational(weight);
  return out;
}

}  // namespace

SymmetrizedProduct symmetrized_product(const GeneratorSet& g, const WordSpec& w) {
  return {permutation_sum(g, w.letters()), exact_for_length(g, w.length())};
}

WeylElement symmetrized_product_naive(const GeneratorSet& g, const WordSpec& w) {
  const std::size_t n = g.dimension();
  std::vector<std::size_t> positions(w.length());
  std::iota(positions.begin(), positions.end(), 0);
  WeylElement out(n);
  do {
    WeylElement prod = WeylElement::scalar(n, 1);
    for (auto p : positions) prod = prod * g.X[w.letters()[p]];
    out += prod;
  } while (std::next_permutation(positions.begin(), positions.end()));
  return out;
}

Polynomial symmetrized_vacuum_image(const GeneratorSet& g, const WordSpec& w) {
  const std::size_t n = g.dimension();
  std::map<std::vector<unsigned>, Polynomial> memo;

  auto image = [&](auto&& self, std::vector<unsigned>& counts) -> Polynomial {
    if (std::all_of(counts.begin(), counts.end(), [](unsigned c) { return c == 0; }))
      return Polynomial::one(n);
    if (auto it = memo.find(counts); it != memo.end()) return it->second;
    Polynomial out(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (counts[a] == 0) continue;
      const unsigned mult = counts[a]--;
      Polynomial inner = self(self, counts);
      ++counts[a];
      out += Rational(mult) * fock_apply(g.X[a], inner);
    }
    memo.emplace(counts, out);
    return out;
  };

  auto counts = letter_counts(g, w.letters());
  return image(image, counts);
}

TheoremReport theorem_check(const GeneratorSet& g, const WordSpec& w, EvaluationRoute route) {
  const std::size_t n = g.dimension();
  Polynomial lhs = route == EvaluationRoute::vacuum
                       ? symmetrized_vacuum_image(g, w)
                       : fock_apply(symmetrized_product(g, w).value, Polynomial::one(n));
  Polynomial expected = Polynomial::monomial(w.monomial(), Rational(factorial(w.length())));
  Polynomial residual = lhs - expected;
  const bool passed = residual.is_zero();
  return {passed, exact_for_length(g, w.length()), std::move(lhs), std::move(expected),
          std::move(residual)};
}

std::vector<Polynomial> cancellation_contributions(const CoefficientFamily& fam, const WordSpec& w,
                                                   std::size_t l, unsigned order) {
  const std::size_t n = fam.dimension();
  if (l >= n) throw std::out_of_range("upper index out of range");
  if (order < 1 || order > fam.max_order()) throw std::out_of_range("order outside 1..max_order");
  if (w.dimension() != n) throw std::invalid_argument("word dimension mismatch");

  const MultiIndex full = w.monomial();
  std::vector<Polynomial> out;
  out.reserve(w.length());
  for (std::size_t i = 0; i < w.length(); ++i) {
    const std::size_t a = w.letters()[i];
    const Polynomial rest = Polynomial::monomial(full - MultiIndex::unit(n, a));
    Polynomial contribution(n);
    for (std::size_t s = 0; s < n; ++s) {
      WeylElement p = fam.polynomial(order, l, a, s);
      if (p.is_zero()) continue;
      contribution += fock_apply(p * WeylElement::d(n, s), rest);
    }
    out.push_back(std::move(contribution));
  }
  return out;
}

Polynomial cancellation_check(const CoefficientFamily& fam, const WordSpec& w, std::size_t l,
                              unsigned order) {
  Polynomial total(fam.dimension());
  for (const auto& c : cancellation_contributions(fam, w, l, order)) total += c;
  return total;
}

namespace {

WeylElement symmetrize_polynomial(const Polynomial& p, const GeneratorSet& g, bool normalize) {
  const std::size_t n = g.dimension();
  if (p.dimension() != n) throw std::invalid_argument("polynomial dimension mismatch");
  const int degree = p.degree();
  if (static_cast<int>(g.order.degree) + 1 < degree)
    throw std::invalid_argument("generator truncation order below deg(p) - 1");
  const auto window = static_cast<unsigned>(static_cast<int>(g.order.degree) + 1 - std::max(degree, 0));
  WeylElement out(n);
  for (const auto& [m, c] : p.element().terms()) {
    std::vector<std::size_t> letters;
    for (std::size_t a = 0; a < n; ++a) letters.insert(letters.end(), m.x[a], a);
    if (letters.empty()) {
      out += WeylElement::scalar(n, c);
      continue;
    }
    Rational coef = c;
    if (normalize) coef /= Rational(factorial(static_cast<unsigned>(letters.size())));
    out += coef * permutation_sum(g, letters, window);
  }
  return out;
}

}  // namespace

WeylElement e_tilde(const Polynomial& p, const GeneratorSet& g) {
  return symmetrize_polynomial(p, g, false);
}

WeylElement e_map(const Polynomial& p, const GeneratorSet& g) {
  return symmetrize_polynomial(p, g, true);
}

Polynomial pi_project(const WeylElement& a) {
  const std::size_t n = a.dimension();
  Polynomial by_action = fock_apply(a, Polynomial::one(n));
  Polynomial d_free(n);
  for (const auto& [m, c] : a.terms())
    if (m.d.is_zero()) d_free.add_term(m.x, c);
  if (!(by_action == d_free))
    throw std::logic_error("vacuum action disagrees with d-free part");
  return by_action;
}

SpanDimension span_dimension(const GeneratorSet& g, std::size_t k) {
  const std::size_t n = g.dimension();
  if (k == 0) throw std::invalid_argument("word length must be positive");
  if (g.order.degree + 1 < k)
    throw std::invalid_argument("truncation order too small for exact degree-k words");
  const unsigned compared = g.order.degree + 1 - static_cast<unsigned>(k);

  std::vector<WeylElement> products;
  std::vector<std::size_t> word(k, 0);
  while (true) {
    WeylElement prod = WeylElement::scalar(n, 1);
    for (std::size_t t = 0; t < k; ++t)
      prod = truncate(prod * g.X[word[t]],
                      TruncationOrder{compared + static_cast<unsigned>(k - t - 1)});
    products.push_back(std::move(prod));

    std::size_t pos = k;
    while (pos > 0 && ++word[pos - 1] == n) word[--pos] = 0;
    if (pos == 0) break;
  }

  std::set<Monomial> columns;
  for (const auto& p : products)
    for (const auto& [m, c] : p.terms()) columns.insert(m);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(products.size());
  for (const auto& p : products) {
    std::vector<Rational> row;
    row.reserve(columns.size());
    for (const auto& m : columns) row.push_back(p.coefficient(m));
    rows.push_back(std::move(row));
  }

  const auto symmetric = binomial(static_cast<unsigned>(n + k - 1), static_cast<unsigned>(k));
  return {exact_rank(rows), static_cast<std::size_t>(symmetric.get_ui()), compared};
}

}  // namespace weylsym
