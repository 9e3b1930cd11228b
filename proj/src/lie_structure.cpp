#include "weylsym/lie_structure.hpp"

#include <cassert>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace weylsym {

StructureConstants::StructureConstants(std::size_t n) : n_(n), data_(n * n * n) {
  if (n == 0) throw std::invalid_argument("Lie algebra dimension must be positive");
}

void StructureConstants::set(std::size_t k, std::size_t i, std::size_t j, const Rational& value) {
  if (k >= n_ || i >= n_ || j >= n_) throw std::out_of_range("structure constant index");
  data_[index(k, i, j)] = value;
}

void StructureConstants::set_bracket(std::size_t k, std::size_t i, std::size_t j,
                                     const Rational& value) {
  set(k, i, j, value);
  set(k, j, i, -value);
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << (kind == Kind::antisymmetry ? "antisymmetry" : "jacobi") << " violation at (";
  for (std::size_t t = 0; t < indices.size(); ++t) os << (t ? "," : "") << indices[t] + 1;
  os << "), residual " << residual.get_str();
  return os.str();
}

std::vector<Violation> validate(const StructureConstants& sc) {
  const std::size_t n = sc.dimension();
  std::vector<Violation> out;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational r = i == j ? sc(k, i, i) : Rational(sc(k, i, j) + sc(k, j, i));
        if (r != 0) out.push_back({Violation::Kind::antisymmetry, {k, i, j}, r});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
          Rational r;
          for (std::size_t s = 0; s < n; ++s)
            r += sc(s, i, j) * sc(m, s, l) + sc(s, j, l) * sc(m, s, i) +
                 sc(s, l, i) * sc(m, s, j);
          if (r != 0) out.push_back({Violation::Kind::jacobi, {i, j, l, m}, r});
        }
  return out;
}

CMatrix::CMatrix(std::size_t n) : n_(n), entries_(n * n, WeylElement(n)) {}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix id(n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = WeylElement::scalar(n, 1);
  return id;
}

namespace {

// Product of two pure-d elements: these commute, so exponents just add.
WeylElement pure_d_product(const WeylElement& a, const WeylElement& b) {
  assert(a.x_degree() <= 0 && b.x_degree() <= 0);
  WeylElement out(a.dimension());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(Monomial{ma.x, ma.d + mb.d}, ca * cb);
  assert(out == a * b && out == b * a);
  return out;
}

}  // namespace

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t n = a.n_;
  CMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t t = 0; t < n; ++t) {
        if (a(r, t).is_zero() || b(t, c).is_zero()) continue;
        out(r, c) += pure_d_product(a(r, t), b(t, c));
      }
  return out;
}

CMatrix cmatrix(const StructureConstants& sc) {
  const std::size_t n = sc.dimension();
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        m(i, j).add_term(Monomial{MultiIndex(n), MultiIndex::unit(n, k)}, sc(i, j, k));
  return m;
}

CMatrix cmatrix_power(const CMatrix& m, unsigned exponent) {
  CMatrix out = CMatrix::identity(m.dimension());
  for (unsigned e = 0; e < exponent; ++e) out = out * m;
  return out;
}

Rational bernoulli(unsigned index) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= index) {
    const unsigned m = static_cast<unsigned>(table.size());
    Rational sum;
    for (unsigned k = 0; k < m; ++k) sum += Rational(binomial(m + 1, k)) * table[k];
    table.push_back(-sum / Rational(m + 1));
  }
  return table[index];
}

Rational embedding_coefficient(unsigned order) {
  Rational c = bernoulli(order) / Rational(factorial(order));
  return order % 2 ? Rational(-c) : c;
}

namespace {

// sum_l x_l sum_{N <= D} coef(N) (C^N)^l_i, from precomputed powers.
WeylElement iota_from_powers(const std::vector<CMatrix>& powers, std::size_t i) {
  const std::size_t n = powers.front().dimension();
  WeylElement out(n);
  for (unsigned order = 0; order < powers.size(); ++order) {
    const Rational coef = embedding_coefficient(order);
    if (coef == 0) continue;
    for (std::size_t l = 0; l < n; ++l)
      for (const auto& [m, c] : powers[order](l, i).terms())
        out.add_term(Monomial{MultiIndex::unit(n, l), m.d}, coef * c);
  }
  return out;
}

std::vector<CMatrix> powers_up_to(const StructureConstants& sc, unsigned max_exponent) {
  const CMatrix c = cmatrix(sc);
  std::vector<CMatrix> powers{CMatrix::identity(sc.dimension())};
  for (unsigned e = 1; e <= max_exponent; ++e) powers.push_back(powers.back() * c);
  return powers;
}

}  // namespace

WeylElement iota(const StructureConstants& sc, std::size_t i, TruncationOrder order) {
  if (i >= sc.dimension()) throw std::out_of_range("basis index out of range");
  return iota_from_powers(powers_up_to(sc, order.degree), i);
}

WeylElement homomorphism_defect(const StructureConstants& sc, std::size_t i, std::size_t j,
                                TruncationOrder order) {
  const std::size_t n = sc.dimension();
  if (i >= n || j >= n) throw std::out_of_range("basis index out of range");
  const auto powers = powers_up_to(sc, order.degree + 1);
  WeylElement defect = commutator(iota_from_powers(powers, i), iota_from_powers(powers, j));
  for (std::size_t k = 0; k < n; ++k)
    if (sc(k, i, j) != 0) defect -= sc(k, i, j) * iota_from_powers(powers, k);
  return truncate(defect, order);
}

CoefficientFamily derived_family(const StructureConstants& sc, unsigned max_order) {
  const std::size_t n = sc.dimension();
  CoefficientFamily fam(n, max_order);
  const auto powers = powers_up_to(sc, max_order - 1);
  for (unsigned order = 1; order <= max_order; ++order) {
    const Rational coef = embedding_coefficient(order);
    if (coef == 0) continue;
    const CMatrix& power = powers[order - 1];
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          WeylElement p(n);
          for (std::size_t s = 0; s < n; ++s)
            if (sc(s, i, j) != 0) p += sc(s, i, j) * power(l, s);
          for (const auto& [m, c] : p.terms())
            fam.set(FamilyKey{order, l, i, j, m.d}, coef * c);
        }
  }
  if (!fam.is_antisymmetric())
    throw std::logic_error("derived family lost antisymmetry; structure constants invalid?");
  return fam;
}

}  // namespace weylsym
