#include "algdeg/groebner.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "algdeg/errors.hpp"

namespace algdeg {

namespace {

void check_deadline(const GroebnerOptions& options) {
  if (options.deadline && Clock::now() > *options.deadline) throw Timeout();
}

// First divisor (in list order) whose leading monomial divides m.
const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial* const> divisors) {
  for (const Polynomial* g : divisors) {
    if (g->leading_monomial().divides(m)) return g;
  }
  return nullptr;
}

Polynomial reduce_fully(const Polynomial& f, std::span<const Polynomial* const> divisors,
                        const GroebnerOptions* options = nullptr) {
  const auto& field = f.field();
  Polynomial p = f;
  std::vector<Term> remainder;
  std::size_t steps = 0;
  while (!p.is_zero()) {
    if (options != nullptr && (++steps & 1023) == 0) check_deadline(*options);
    const Term lt = p.leading_term();
    const Polynomial* g = find_reducer(lt.mono, divisors);
    if (g == nullptr) {
      remainder.push_back(lt);
      p = p.without_leading_term();
      continue;
    }
    const Coeff c = field.neg(field.div(lt.coeff, g->leading_coeff()));
    p = p.add_scaled_shifted(c, lt.mono / g->leading_monomial(), *g);
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(remainder));
}

std::vector<const Polynomial*> pointers(std::span<const Polynomial> polys) {
  std::vector<const Polynomial*> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    if (!p.is_zero()) out.push_back(&p);
  }
  return out;
}

std::vector<Polynomial> reorder_all(std::span<const Polynomial> polys, const RingPtr& ring) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(embed(p, ring));
  return out;
}

struct Pair {
  std::size_t i;
  std::size_t j;  // i < j
  Monomial lcm;
};

// Buchberger state with the Gebauer-Moeller update.
class BuchbergerRun {
 public:
  BuchbergerRun(RingPtr ring, const GroebnerOptions& options) : ring_(std::move(ring)), options_(options) {}

  // h must be reduced with respect to the active generators. Returns false
  // as soon as a nonzero constant enters the basis.
  bool insert(Polynomial h) {
    h = h.monic();
    if (h.is_constant()) {
      unit_ = true;
      return false;
    }
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].leading_monomial();

    // Candidate pairs (g, h) for active g, filtered by the chain criterion
    // among themselves, then by the product criterion.
    std::vector<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back({g, hi, polys_[g].leading_monomial().lcm(lh)});
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& pa = candidates[a];
      bool drop = false;
      if (!polys_[pa.i].leading_monomial().coprime(lh)) {
        for (std::size_t b = a + 1; b < candidates.size() && !drop; ++b) {
          drop = candidates[b].lcm.divides(pa.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !drop; ++b) drop = kept[b].lcm.divides(pa.lcm);
      }
      if (!drop) kept.push_back(pa);
    }
    std::erase_if(kept, [&](const Pair& p) { return polys_[p.i].leading_monomial().coprime(lh); });

    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial li = polys_[p.i].leading_monomial().lcm(lh);
      const Monomial lj = polys_[p.j].leading_monomial().lcm(lh);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    std::erase_if(active_, [&](std::size_t g) { return lh.divides(polys_[g].leading_monomial()); });
    active_.push_back(hi);
    return true;
  }

  void run() {
    const auto& order = ring_->order();
    while (!pairs_.empty() && !unit_) {
      check_deadline(options_);
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return a.i != b.i ? a.i < b.i : a.j < b.j;
      });
      const Pair pair = *best;
      pairs_.erase(best);
      Polynomial s = s_polynomial(polys_[pair.i], polys_[pair.j]);
      Polynomial h = reduce(s);
      if (!h.is_zero()) insert(std::move(h));
    }
  }

  Polynomial reduce(const Polynomial& f) const { return reduce_fully(f, active_pointers(), &options_); }

  GroebnerBasis finish() const {
    GroebnerBasis gb{ring_, {}};
    if (unit_) {
      gb.generators.push_back(Polynomial::constant(ring_, 1));
      return gb;
    }
    std::vector<Polynomial> minimal;
    for (std::size_t g : active_) minimal.push_back(polys_[g]);
    const auto& order = ring_->order();
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.less(a.leading_monomial(), b.leading_monomial());
    });
    // Interreduce tails. Leading monomials are pairwise non-dividing so
    // only tails change.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const Polynomial*> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(&minimal[j]);
      }
      const Term lt = minimal[i].leading_term();
      Polynomial tail = reduce_fully(minimal[i].without_leading_term(), others, &options_);
      minimal[i] = (Polynomial::term(ring_, lt.mono, lt.coeff) + tail).monic();
    }
    gb.generators = std::move(minimal);
    return gb;
  }

 private:
  std::vector<const Polynomial*> active_pointers() const {
    std::vector<const Polynomial*> out;
    out.reserve(active_.size());
    for (std::size_t g : active_) out.push_back(&polys_[g]);
    return out;
  }

  RingPtr ring_;
  const GroebnerOptions& options_;
  std::deque<Polynomial> polys_;  // stable addresses
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) require_same_ring(f, g);
  return reduce_fully(f, pointers(divisors));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrdering& order) {
  auto ring = Ring::make(f.nvars(), f.field(), order);
  auto gs = reorder_all(divisors, ring);
  return reduce_fully(embed(f, ring), pointers(gs));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) throw DegreeError("s_polynomial: zero operand");
  const auto& field = f.field();
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.mul_term(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  return a.add_scaled_shifted(field.neg(field.inv(g.leading_coeff())), l / g.leading_monomial(), g);
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const GroebnerOptions& options) {
  if (generators.empty()) throw ContextError("buchberger: no generators (ring unknown)");
  RingPtr ring = generators.front().ring_ptr();
  for (const auto& g : generators) require_same_ring(generators.front(), g);
  BuchbergerRun run(ring, options);
  // Inputs enter one at a time, each reduced by what is already present.
  for (const auto& g : generators) {
    Polynomial h = run.reduce(g);
    if (h.is_zero()) continue;
    if (!run.insert(std::move(h))) break;
  }
  run.run();
  return run.finish();
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrdering& order,
                         const GroebnerOptions& options) {
  if (generators.empty()) throw ContextError("buchberger: no generators (ring unknown)");
  auto ring = Ring::make(generators.front().nvars(), generators.front().field(), order);
  auto gs = reorder_all(generators, ring);
  return buchberger(gs, options);
}

bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.generators.size(); ++i) {
    const auto& g = gb.generators[i];
    if (g.is_zero() || g.leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < gb.generators.size(); ++j) {
      if (i == j) continue;
      const Monomial& lj = gb.generators[j].leading_monomial();
      for (const auto& t : g.terms()) {
        if (lj.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  auto divs = pointers(gb.generators);
  for (std::size_t i = 0; i < gb.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
      Polynomial s = s_polynomial(gb.generators[i], gb.generators[j]);
      if (!reduce_fully(s, divs).is_zero()) return false;
    }
  }
  return true;
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit()) return true;
  const std::size_t n = gb.ring->nvars();
  std::vector<bool> seen(n, false);
  for (const auto& g : gb.generators) {
    const Monomial& lm = g.leading_monomial();
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (lm[v] != 0) {
        ++support;
        var = v;
      }
    }
    if (support == 1) seen[var] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

QuotientBasis quotient_basis(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb)) throw DimensionError("ideal is not zero-dimensional");
  QuotientBasis qb;
  if (gb.is_unit()) return qb;
  const std::size_t n = gb.ring->nvars();
  auto divs = pointers(gb.generators);
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue{Monomial::one(n)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    qb.monomials.push_back(m);
    for (std::size_t v = 0; v < n; ++v) {
      Monomial next = m * Monomial::variable(n, v);
      if (seen.count(next) != 0 || find_reducer(next, divs) != nullptr) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  const auto& order = gb.ordering();
  std::sort(qb.monomials.begin(), qb.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return qb;
}

std::size_t quotient_dimension(const GroebnerBasis& gb) { return quotient_basis(gb).size(); }

QuotientRing::QuotientRing(GroebnerBasis gb) : gb_(std::move(gb)), qb_(quotient_basis(gb_)) {
  for (std::size_t i = 0; i < qb_.size(); ++i) index_.emplace(qb_.monomials[i], i);
}

std::vector<Coeff> QuotientRing::coordinates(const Polynomial& f) const {
  std::vector<Coeff> out(dimension(), 0);
  Polynomial r = reduce_fully(f, pointers(gb_.generators));
  for (const auto& t : r.terms()) out[index_.at(t.mono)] = t.coeff;
  return out;
}

std::vector<Coeff> QuotientRing::column(std::size_t var, std::size_t j) const {
  const std::size_t n = gb_.ring->nvars();
  Monomial m = qb_.monomials[j] * Monomial::variable(n, var);
  if (auto it = index_.find(m); it != index_.end()) {
    std::vector<Coeff> e(dimension(), 0);
    e[it->second] = 1;
    return e;
  }
  return coordinates(Polynomial::term(gb_.ring, m, 1));
}

DenseMatrix QuotientRing::multiplication_matrix_serial(std::size_t var) const {
  if (var >= gb_.ring->nvars()) throw ContextError("multiplication matrix: variable out of range");
  const std::size_t d = dimension();
  DenseMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto col = column(var, j);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

DenseMatrix QuotientRing::multiplication_matrix(std::size_t var) const {
  if (var >= gb_.ring->nvars()) throw ContextError("multiplication matrix: variable out of range");
  const std::size_t d = dimension();
  DenseMatrix m(d, d);
  const auto cols = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(dynamic, 4) if (d > 16)
  for (std::ptrdiff_t j = 0; j < cols; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    auto col = column(var, uj);
    for (std::size_t i = 0; i < d; ++i) m(i, uj) = col[i];
  }
  return m;
}

Polynomial QuotientRing::minimal_polynomial(std::size_t var) const {
  const auto& field = gb_.ring->field();
  auto uni = Ring::make(1, field);
  const std::size_t d = dimension();
  if (d == 0) return Polynomial::constant(uni, 1);

  // Krylov matrix with columns 1, x, x^2, ..., x^d in quotient coordinates;
  // the first non-pivot column of its echelon form is the first dependency.
  const DenseMatrix mult = multiplication_matrix(var);
  DenseMatrix krylov(d, d + 1);
  std::vector<Coeff> v = coordinates(Polynomial::constant(gb_.ring, 1));
  for (std::size_t k = 0; k <= d; ++k) {
    for (std::size_t i = 0; i < d; ++i) krylov(i, k) = v[i];
    if (k < d) v = mat_vec(mult, v, field);
  }
  const RowEchelon ech = row_reduce(std::move(krylov), field);
  std::size_t deg = 0;
  while (deg < ech.pivots.size() && ech.pivots[deg] == deg) ++deg;
  // Columns 0..deg-1 are pivots in rows 0..deg-1, so column deg expresses
  // x^deg in terms of lower powers.
  std::vector<Term> terms;
  terms.push_back({Monomial::variable(1, 0, static_cast<int>(deg)), 1});
  for (std::size_t i = 0; i < deg; ++i) {
    terms.push_back({Monomial::variable(1, 0, static_cast<int>(i)), field.neg(ech.reduced(i, deg))});
  }
  return Polynomial::from_terms(uni, std::move(terms));
}

DenseMatrix multiplication_matrix(const GroebnerBasis& gb, std::size_t var) {
  return QuotientRing(gb).multiplication_matrix(var);
}

Polynomial minimal_polynomial(const GroebnerBasis& gb, std::size_t var) {
  return QuotientRing(gb).minimal_polynomial(var);
}

}  // namespace algdeg
