#include "algdeg/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace algdeg {

namespace {

constexpr int kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

void check_nvars(std::size_t n) {
  if (n > kMaxVars) throw std::length_error("monomial: more than kMaxVars variables");
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_nvars(nvars); }

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= nvars_) throw std::out_of_range("monomial: variable index out of range");
  if (e < 0 || e > kMaxExponent) throw std::overflow_error("monomial: exponent out of range");
  degree_ = degree_ - exps_[i] + static_cast<std::uint32_t>(e);
  exps_[i] = static_cast<Exponent>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) {
    int e = int{exps_[i]} + other.exps_[i];
    if (e > kMaxExponent) throw std::overflow_error("monomial: exponent overflow in product");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(nvars_);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

MonomialOrdering::MonomialOrdering(OrderKind kind, std::vector<std::size_t> permutation)
    : kind_(kind), perm_(std::move(permutation)) {
  if (perm_.empty()) return;
  std::vector<std::size_t> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("monomial ordering: not a permutation");
  }
  bool identity = true;
  for (std::size_t i = 0; i < perm_.size(); ++i) identity = identity && perm_[i] == i;
  if (identity) perm_.clear();
}

int MonomialOrdering::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  if (kind_ == OrderKind::lex) {
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t v = var_at(r);
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  // Equal degree: the monomial with the smaller exponent in the last
  // differing variable is larger.
  for (std::size_t r = n; r-- > 0;) {
    const std::size_t v = var_at(r);
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

}  // namespace algdeg
