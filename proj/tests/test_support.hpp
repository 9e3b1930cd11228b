#pragma once

// Instance generators and independent oracles shared by the test binaries.

#include <cstdint>
#include <numeric>
#include <vector>

#include "weylsym/lie_structure.hpp"
#include "weylsym/random.hpp"
#include "weylsym/symmetrization.hpp"
#include "weylsym/weyl_element.hpp"

namespace weylsym::testing {

inline MultiIndex random_exponents(std::size_t n, unsigned max_total, Rng& rng) {
  MultiIndex m(n);
  const auto total = static_cast<unsigned>(rng.below(max_total + 1));
  for (unsigned t = 0; t < total; ++t) ++m[rng.below(n)];
  return m;
}

/// Sparse element with 1..4 terms, x- and d-degree <= max_degree.
inline WeylElement random_element(std::size_t n, unsigned max_degree, Rng& rng) {
  WeylElement a(n);
  const auto terms = 1 + rng.below(4);
  for (std::uint64_t t = 0; t < terms; ++t)
    a.add_term(Monomial{random_exponents(n, max_degree, rng), random_exponents(n, max_degree, rng)},
               rng.small_nonzero_rational());
  return a;
}

inline Polynomial random_polynomial(std::size_t n, unsigned max_degree, Rng& rng,
                                    std::uint64_t max_terms = 4) {
  Polynomial p(n);
  const auto terms = 1 + rng.below(max_terms);
  for (std::uint64_t t = 0; t < terms; ++t)
    p.add_term(random_exponents(n, max_degree, rng), rng.small_nonzero_rational());
  return p;
}

inline StructureConstants abelian(std::size_t n) { return StructureConstants(n); }

/// [X1, X2] = X3.
inline StructureConstants heisenberg() {
  StructureConstants sc(3);
  sc.set_bracket(2, 0, 1, 1);
  return sc;
}

/// Basis e, f, h/2: [X1,X2] = 2 X3, [X3,X1] = X1, [X3,X2] = -X2.
inline StructureConstants sl2() {
  StructureConstants sc(3);
  sc.set_bracket(2, 0, 1, 2);
  sc.set_bracket(0, 2, 0, 1);
  sc.set_bracket(1, 2, 1, -1);
  return sc;
}

/// [X1,X2] = X3 and cyclic.
inline StructureConstants so3() {
  StructureConstants sc(3);
  sc.set_bracket(2, 0, 1, 1);
  sc.set_bracket(0, 1, 2, 1);
  sc.set_bracket(1, 2, 0, 1);
  return sc;
}

/// [X1, X2] = X2.
inline StructureConstants solvable2() {
  StructureConstants sc(2);
  sc.set_bracket(1, 0, 1, 1);
  return sc;
}

/// [X1, X2] = X3, [X1, X3] = X4.
inline StructureConstants filiform4() {
  StructureConstants sc(4);
  sc.set_bracket(2, 0, 1, 1);
  sc.set_bracket(3, 0, 2, 1);
  return sc;
}

/// Strictly upper-triangular m x m matrices, basis E_ab (a < b) in row-major
/// order: [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb.
inline StructureConstants upper_triangular_nilpotent(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) basis.emplace_back(a, b);
  auto index_of = [&](std::size_t a, std::size_t b) {
    for (std::size_t t = 0; t < basis.size(); ++t)
      if (basis[t] == std::pair{a, b}) return t;
    return basis.size();
  };
  StructureConstants sc(basis.size());
  for (std::size_t x = 0; x < basis.size(); ++x)
    for (std::size_t y = 0; y < basis.size(); ++y) {
      const auto [a, b] = basis[x];
      const auto [c, d] = basis[y];
      if (b == c) sc.set(index_of(a, d), x, y, sc(index_of(a, d), x, y) + 1);
      if (d == a) sc.set(index_of(c, b), x, y, sc(index_of(c, b), x, y) - 1);
    }
  return sc;
}

inline StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b) {
  const std::size_t na = a.dimension(), nb = b.dimension();
  StructureConstants sc(na + nb);
  for (std::size_t k = 0; k < na; ++k)
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) sc.set(k, i, j, a(k, i, j));
  for (std::size_t k = 0; k < nb; ++k)
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) sc.set(na + k, na + i, na + j, b(k, i, j));
  return sc;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Constants in the basis Y_a = sum_i P[i][a] X_i, given P and its inverse.
inline StructureConstants change_basis(const StructureConstants& sc, const RationalMatrix& p,
                                       const RationalMatrix& p_inv) {
  const std::size_t n = sc.dimension();
  StructureConstants out(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Rational v;
        for (std::size_t k = 0; k < n; ++k) {
          if (p_inv[c][k] == 0) continue;
          for (std::size_t i = 0; i < n; ++i) {
            if (p[i][a] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
              if (p[j][b] != 0 && sc(k, i, j) != 0) v += p_inv[c][k] * p[i][a] * p[j][b] * sc(k, i, j);
          }
        }
        out.set(c, a, b, v);
      }
  return out;
}

/// Random change of basis built from elementary column operations with
/// small integer multipliers and scalings by +-1, +-2; the inverse is tracked
/// alongside so no inversion is needed.
inline std::pair<RationalMatrix, RationalMatrix> random_basis_change(std::size_t n, Rng& rng,
                                                                     int steps = 4) {
  auto p = identity_matrix(n), p_inv = identity_matrix(n);
  for (int s = 0; s < steps; ++s) {
    const auto a = rng.below(n), b = rng.below(n);
    if (a != b) {
      // col_a += c col_b on P, row_b -= c row_a on P^{-1}.
      const Rational c(static_cast<long>(rng.between(-2, 2)));
      for (std::size_t r = 0; r < n; ++r) p[r][a] += c * p[r][b];
      for (std::size_t r = 0; r < n; ++r) p_inv[b][r] -= c * p_inv[a][r];
    } else {
      static const long scales[] = {-2, -1, 1, 2};
      const Rational c(scales[rng.below(4)]);
      for (std::size_t r = 0; r < n; ++r) p[r][a] *= c;
      for (std::size_t r = 0; r < n; ++r) p_inv[a][r] /= c;
    }
  }
  return {p, p_inv};
}

/// Jacobi-valid tables from structured families (abelian, nilpotent,
/// solvable, simple, direct sums), randomly rescaled and rebased.
inline StructureConstants random_lie_algebra(std::uint64_t seed) {
  Rng rng(seed);
  StructureConstants base(1);
  switch (rng.below(9)) {
    case 0: base = heisenberg(); break;
    case 1: base = sl2(); break;
    case 2: base = so3(); break;
    case 3: base = solvable2(); break;
    case 4: base = filiform4(); break;
    case 5: base = direct_sum(solvable2(), solvable2()); break;
    case 6: base = direct_sum(heisenberg(), abelian(1)); break;
    case 7: base = direct_sum(abelian(1), sl2()); break;
    default: base = abelian(1 + rng.below(3)); break;
  }
  auto [p, p_inv] = random_basis_change(base.dimension(), rng);
  return change_basis(base, p, p_inv);
}

/// Rank by plain Gaussian elimination over Q.
inline std::size_t gaussian_rank(RationalMatrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Bernoulli numbers by the Akiyama-Tanigawa transform (gives B_1 = +1/2;
/// sign flipped here to the B_1 = -1/2 convention).
inline std::vector<Rational> bernoulli_akiyama_tanigawa(unsigned count) {
  std::vector<Rational> out, a(count);
  for (unsigned m = 0; m < count; ++m) {
    a[m] = make_rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out.push_back(m == 1 ? Rational(-a[0]) : a[0]);
  }
  return out;
}

/// Taylor coefficients of t / (1 - e^{-t}) by inverting the power series
/// (1 - e^{-t}) / t = sum_N (-1)^N t^N / (N+1)!.
inline std::vector<Rational> series_t_over_one_minus_exp(unsigned count) {
  std::vector<Rational> f(count), g(count);
  for (unsigned N = 0; N < count; ++N) {
    f[N] = Rational(1) / Rational(factorial(N + 1));
    if (N % 2) f[N] = -f[N];
  }
  for (unsigned N = 0; N < count; ++N) {
    Rational s = N == 0 ? Rational(1) : Rational(0);
    for (unsigned t = 1; t <= N; ++t) s -= f[t] * g[N - t];
    g[N] = s / f[0];
  }
  return g;
}

/// sum_{i != j} p^{N-1,l}_{alpha(i) alpha(j)}(d) |> prod_{r not in {i,j}} x_{alpha(r)}:
/// the double sum the cancellation argument reduces to.
inline Polynomial contraction_oracle(const CoefficientFamily& fam, const WordSpec& w,
                                     std::size_t l, unsigned order) {
  const std::size_t n = fam.dimension();
  const auto& a = w.letters();
  Polynomial total(n);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j) continue;
      MultiIndex rest(n);
      for (std::size_t r = 0; r < a.size(); ++r)
        if (r != i && r != j) ++rest[a[r]];
      total += fock_apply(fam.polynomial(order, l, a[i], a[j]), Polynomial::monomial(rest));
    }
  return total;
}

}  // namespace weylsym::testing
