#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace algdeg {

// Upper bound on ring variables. Desk-scale Lagrange rings use at most 2n.
inline constexpr std::size_t kMaxVars = 16;

// Exponent vector with a cached total degree. Exponents are 16-bit and
// every product is overflow-checked.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::span<const int> exponents);

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, int e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  // Throws std::overflow_error when an exponent leaves the 16-bit range.
  Monomial operator*(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { lex, grevlex };

// A term order on monomials. `permutation[r]` names the variable that plays
// the role of position r, so lex with the identity permutation has x1 > x2 > ...
class MonomialOrdering {
 public:
  MonomialOrdering() = default;
  explicit MonomialOrdering(OrderKind kind, std::vector<std::size_t> permutation = {});

  static MonomialOrdering lex() { return MonomialOrdering(OrderKind::lex); }
  static MonomialOrdering grevlex() { return MonomialOrdering(OrderKind::grevlex); }

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }

  // Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrdering&, const MonomialOrdering&) = default;

 private:
  std::size_t var_at(std::size_t r) const { return perm_.empty() ? r : perm_[r]; }

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<std::size_t> perm_;  // empty means identity
};

}  // namespace algdeg
