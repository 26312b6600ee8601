#include "algdeg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "algdeg/errors.hpp"

namespace algdeg {

Ring::Ring(std::size_t nvars, PrimeField field, MonomialOrdering order)
    : nvars_(nvars), field_(field), order_(std::move(order)) {
  if (nvars > kMaxVars) throw ContextError("ring: too many variables");
  if (!order_.permutation().empty() && order_.permutation().size() != nvars) {
    throw ContextError("ring: ordering permutation does not match the variable count");
  }
}

bool same_ring(const Ring& a, const Ring& b) { return &a == &b || a == b; }

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw ContextError("polynomials belong to different rings");
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  const std::size_t n = ring->nvars();
  return term(std::move(ring), Monomial::one(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->nvars();
  if (index >= n) throw ContextError("variable index out of range");
  return term(std::move(ring), Monomial::variable(n, index), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Coeff c) {
  if (m.size() != ring->nvars()) throw ContextError("monomial length does not match the ring");
  c = ring->field().from_uint(c);
  std::vector<Term> t;
  if (c != 0) t.push_back({m, c});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  for (const auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw ContextError("monomial length does not match the ring");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = field.from_uint(t.coeff);
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({t.mono, c});
    }
  }
  return Polynomial(std::move(ring), std::move(out));
}

Coeff Polynomial::coeff(const Monomial& m) const {
  const auto& order = ring_->order();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [&](const Term& t, const Monomial& key) { return order.greater(t.mono, key); });
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) throw DegreeError("total degree of the zero polynomial is undefined");
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return static_cast<int>(d);
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  *this = add_scaled_shifted(1, Monomial::one(nvars()), g);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  *this = add_scaled_shifted(field().neg(1), Monomial::one(nvars()), g);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  require_same_ring(*this, g);
  const auto& field = this->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) {
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, 0);
      it->second = field.mul_add(a.coeff, b.coeff, it->second);
    }
  }
  std::vector<Term> t;
  t.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) t.push_back({m, c});
  }
  const auto& order = ring_->order();
  std::sort(t.begin(), t.end(), [&](const Term& x, const Term& y) { return order.greater(x.mono, y.mono); });
  terms_ = std::move(t);
  return *this;
}

Polynomial Polynomial::scaled(Coeff c) const {
  c = field().from_uint(c);
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  c = field().from_uint(c);
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  // Multiplying by a monomial preserves the order of the terms.
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff = field().mul(t.coeff, c);
  }
  return r;
}

Polynomial Polynomial::add_scaled_shifted(Coeff c, const Monomial& m, const Polynomial& g) const {
  require_same_ring(*this, g);
  const auto& field = this->field();
  const auto& order = ring_->order();
  if (c == 0 || g.is_zero()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const bool shift = !m.is_one();
  Term cur{};
  bool have = false;
  auto next_g = [&]() {
    cur.mono = shift ? g.terms_[j].mono * m : g.terms_[j].mono;
    cur.coeff = field.mul(g.terms_[j].coeff, c);
    have = true;
  };
  if (j < g.terms_.size()) next_g();
  while (i < terms_.size() && have) {
    int cmp = order.compare(terms_[i].mono, cur.mono);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back(cur);
      have = false;
      if (++j < g.terms_.size()) next_g();
    } else {
      Coeff s = field.add(terms_[i].coeff, cur.coeff);
      if (s != 0) out.push_back({cur.mono, s});
      ++i;
      have = false;
      if (++j < g.terms_.size()) next_g();
    }
  }
  while (i < terms_.size()) out.push_back(terms_[i++]);
  while (have) {
    out.push_back(cur);
    have = false;
    if (++j < g.terms_.size()) next_g();
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading_coeff()));
}

Polynomial Polynomial::without_leading_term() const {
  if (is_zero()) return *this;
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring(), b.ring()) && a.terms_ == b.terms_;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.nvars()) throw ContextError("partial derivative: variable index out of range");
  const auto& field = f.field();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    const int e = t.mono[var];
    if (e == 0) continue;
    Coeff c = field.mul(t.coeff, field.from_uint(static_cast<std::uint64_t>(e)));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, c});
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(out));
}

Polynomial homogenize(const Polynomial& f, int d) {
  if (!f.is_zero() && d < f.total_degree()) {
    throw DegreeError("homogenize: target degree below the degree of the polynomial");
  }
  if (d < 0) throw DegreeError("homogenize: negative target degree");
  const std::size_t n = f.nvars();
  auto ring = Ring::make(n + 1, f.field(), MonomialOrdering(f.ring().order().kind()));
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(n + 1);
    m.set(0, d - static_cast<int>(t.mono.degree()));
    for (std::size_t j = 0; j < n; ++j) m.set(j + 1, t.mono[j]);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(std::move(ring), std::move(out));
}

Polynomial dehomogenize(const Polynomial& h) {
  const std::size_t n = h.nvars();
  if (n == 0) throw ContextError("dehomogenize: ring has no variables");
  auto ring = Ring::make(n - 1, h.field(), MonomialOrdering(h.ring().order().kind()));
  std::vector<Term> out;
  out.reserve(h.size());
  for (const auto& t : h.terms()) {
    Monomial m(n - 1);
    for (std::size_t j = 1; j < n; ++j) m.set(j - 1, t.mono[j]);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(std::move(ring), std::move(out));
}

Coeff evaluate(const Polynomial& f, std::span<const Coeff> point) {
  if (point.size() != f.nvars()) throw ContextError("evaluate: point length does not match the ring");
  const auto& field = f.field();
  // Power tables keep the cost linear in the number of terms.
  std::vector<std::vector<Coeff>> powers(f.nvars());
  Coeff acc = 0;
  for (const auto& t : f.terms()) {
    Coeff v = t.coeff;
    for (std::size_t j = 0; j < f.nvars() && v != 0; ++j) {
      const std::size_t e = t.mono[j];
      if (e == 0) continue;
      auto& tab = powers[j];
      if (tab.empty()) tab.push_back(1);
      while (tab.size() <= e) tab.push_back(field.mul(tab.back(), field.from_uint(point[j])));
      v = field.mul(v, tab[e]);
    }
    acc = field.add(acc, v);
  }
  return acc;
}

Polynomial change_ring(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> var_map) {
  if (var_map.size() != f.nvars()) throw ContextError("change_ring: variable map has the wrong length");
  if (!(target->field() == f.field())) throw ContextError("change_ring: prime fields differ");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t j = 0; j < f.nvars(); ++j) {
      if (t.mono[j] == 0) continue;
      if (var_map[j] >= target->nvars()) throw ContextError("change_ring: target variable out of range");
      m.set(var_map[j], m[var_map[j]] + t.mono[j]);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial with_ordering(const Polynomial& f, const MonomialOrdering& order) {
  auto ring = Ring::make(f.nvars(), f.field(), order);
  std::vector<Term> t(f.terms().begin(), f.terms().end());
  return Polynomial::from_terms(std::move(ring), std::move(t));
}

Polynomial embed(const Polynomial& f, const RingPtr& target) {
  std::vector<std::size_t> map(f.nvars());
  std::iota(map.begin(), map.end(), std::size_t{0});
  return change_ring(f, target, map);
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw DivisionByZero();
  const auto& field = f.field();
  const Coeff inv_lc = field.inv(g.leading_coeff());
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.mono)) throw std::domain_error("divide_exact: divisor does not divide");
    Term q{lt.mono / g.leading_monomial(), field.mul(lt.coeff, inv_lc)};
    quotient.push_back(q);
    rest = rest.add_scaled_shifted(field.neg(q.coeff), q.mono, g);
  }
  // Quotient terms were produced in decreasing order.
  return Polynomial::from_terms(f.ring_ptr(), std::move(quotient));
}

}  // namespace algdeg
