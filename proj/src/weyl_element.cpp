#include "weylsym/weyl_element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylsym {

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.x.hash();
  return h ^ (m.d.hash() * 0x100000001b3ull + (h << 7));
}

WeylElement::WeylElement(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("Weyl algebra dimension must be positive");
}

WeylElement WeylElement::x(std::size_t n, std::size_t i) {
  return term(n, Monomial{MultiIndex::unit(n, i), MultiIndex(n)}, 1);
}

WeylElement WeylElement::d(std::size_t n, std::size_t j) {
  return term(n, Monomial{MultiIndex(n), MultiIndex::unit(n, j)}, 1);
}

WeylElement WeylElement::scalar(std::size_t n, const Rational& c) {
  return term(n, Monomial{MultiIndex(n), MultiIndex(n)}, c);
}

WeylElement WeylElement::term(std::size_t n, Monomial m, const Rational& c) {
  WeylElement e(n);
  e.add_term(m, c);
  return e;
}

void WeylElement::check_monomial(const Monomial& m) const {
  if (m.x.size() != n_ || m.d.size() != n_)
    throw std::invalid_argument("monomial length does not match dimension");
}

void WeylElement::check_same_dimension(const WeylElement& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Weyl algebra dimension mismatch");
}

Rational WeylElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  check_monomial(m);
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Monomial, Rational>> WeylElement::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

int WeylElement::x_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<int>(m.x.total()));
  return deg;
}

int WeylElement::d_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<int>(m.d.total()));
  return deg;
}

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  check_same_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other) {
  check_same_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
WeylElement operator-(WeylElement a) { return a *= Rational(-1); }
WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }

namespace {

// Reorders d^b x^c = sum_t prod_i C(b_i,t_i) C(c_i,t_i) t_i! x^{c-t} d^{b-t}
// and attaches the outer x^a (left) and d^e (right).
void multiply_monomials(const Monomial& left, const Monomial& right, const Rational& coeff,
                        WeylElement& out) {
  const std::size_t n = left.x.size();
  const MultiIndex& b = left.d;
  const MultiIndex& c = right.x;

  // Per-coordinate contraction weights.
  std::vector<std::vector<Integer>> weight(n);
  MultiIndex bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    bound[i] = std::min(b[i], c[i]);
    weight[i].resize(bound[i] + 1);
    for (unsigned t = 0; t <= bound[i]; ++t)
      weight[i][t] = binomial(b[i], t) * binomial(c[i], t) * factorial(t);
  }

  MultiIndex t(n);
  while (true) {
    Integer w = 1;
    for (std::size_t i = 0; i < n; ++i) w *= weight[i][t[i]];
    Monomial m{left.x + (c - t), (b - t) + right.d};
    out.add_term(m, coeff * Rational(w));

    std::size_t i = 0;
    for (; i < n; ++i) {
      if (t[i] < bound[i]) {
        ++t[i];
        break;
      }
      t[i] = 0;
    }
    if (i == n) break;
  }
}

}  // namespace

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("Weyl algebra dimension mismatch");
  WeylElement out(a.dimension());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) multiply_monomials(ma, mb, ca * cb, out);
  return out;
}

WeylElement add(const WeylElement& a, const WeylElement& b) { return a + b; }
WeylElement scale(const Rational& c, const WeylElement& a) { return c * a; }
WeylElement mul(const WeylElement& a, const WeylElement& b) { return a * b; }
WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylElement truncate(const WeylElement& a, TruncationOrder order) {
  WeylElement out(a.dimension());
  for (const auto& [m, c] : a.terms())
    if (m.d.total() <= order.degree) out.add_term(m, c);
  return out;
}

Polynomial::Polynomial(WeylElement elem) : elem_(std::move(elem)) {
  for (const auto& [m, c] : elem_.terms())
    if (!m.d.is_zero())
      throw std::invalid_argument("polynomial term carries a derivative");
}

Polynomial Polynomial::one(std::size_t n) { return Polynomial(WeylElement::scalar(n, 1)); }

Polynomial Polynomial::monomial(const MultiIndex& x, const Rational& c) {
  Polynomial p(x.size());
  p.add_term(x, c);
  return p;
}

Rational Polynomial::coefficient(const MultiIndex& x) const {
  return elem_.coefficient(Monomial{x, MultiIndex(dimension())});
}

void Polynomial::add_term(const MultiIndex& x, const Rational& c) {
  elem_.add_term(Monomial{x, MultiIndex(dimension())}, c);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  elem_ += other.elem_;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  elem_ -= other.elem_;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  elem_ *= c;
  return *this;
}

Polynomial fock_apply(const WeylElement& a, const Polynomial& p) {
  if (a.dimension() != p.dimension())
    throw std::invalid_argument("Weyl algebra dimension mismatch");
  const std::size_t n = a.dimension();
  Polynomial out(n);
  for (const auto& [m, ca] : a.terms()) {
    for (const auto& [pm, cp] : p.element().terms()) {
      if (!m.d.divides(pm.x)) continue;
      Integer falling = 1;
      for (std::size_t i = 0; i < n; ++i)
        for (unsigned r = 0; r < m.d[i]; ++r) falling *= pm.x[i] - r;
      out.add_term(m.x + (pm.x - m.d), ca * cp * Rational(falling));
    }
  }
  return out;
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char sym, const MultiIndex& e) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first) os << '*';
      first = false;
      os << sym << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
    }
  };
  emit('x', m.x);
  emit('d', m.d);
  if (first) os << '1';
  return os.str();
}

std::string to_string(const WeylElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.sorted_terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit_monomial = m.x.is_zero() && m.d.is_zero();
    if (mag != 1 || unit_monomial) {
      os << mag.get_str();
      if (!unit_monomial) os << '*';
    }
    if (!unit_monomial) os << to_string(m);
  }
  return os.str();
}

std::string to_string(const Polynomial& p) { return to_string(p.element()); }

}  // namespace weylsym
