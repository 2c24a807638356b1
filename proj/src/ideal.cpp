#include "nws/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nws/semigroup.hpp"

namespace nws {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& reducers,
                       std::vector<Polynomial>* quotients) {
  for (const auto& g : reducers) require_same_ring(f.ring(), g.ring());
  if (quotients) {
    quotients->assign(reducers.size(), Polynomial(f.ring()));
  }
  const RingPtr& ring = f.ring();
  const GradedRing& R = *ring;
  Polynomial h = f;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    bool reduced = false;
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      const Polynomial& g = reducers[k];
      if (g.is_zero()) continue;
      if (!R.divides(g.leading_monomial(), h.leading_monomial())) continue;
      const mpq_class c = h.leading_coefficient() / g.leading_coefficient();
      const Monomial m = R.div(h.leading_monomial(), g.leading_monomial());
      h = h - g.times_term(c, m);
      if (quotients) {
        (*quotients)[k] = (*quotients)[k] + Polynomial::monomial(ring, c, m);
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(h.leading_term());
      h = h - Polynomial::monomial(ring, h.leading_term().coeff, h.leading_term().mono);
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

namespace {

struct Pair {
  std::int64_t degree;  // weighted degree of the lcm
  int i, j;
  bool operator<(const Pair& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const GradedRing& R = *f.ring();
  const Monomial l = R.lcm(f.leading_monomial(), g.leading_monomial());
  const Monomial mf = R.div(l, f.leading_monomial());
  const Monomial mg = R.div(l, g.leading_monomial());
  return f.times_term(mpq_class(1) / f.leading_coefficient(), mf) -
         g.times_term(mpq_class(1) / g.leading_coefficient(), mg);
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j != i) others.push_back(basis[j]);
      }
      Polynomial r = normal_form(basis[i], others);
      if (r != basis[i]) {
        changed = true;
        if (r.is_zero()) {
          basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          basis[i] = r.monic();
        }
      }
    }
  }
  return basis;
}

}  // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> generators) {
  std::vector<Polynomial> basis;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) {
      fail(errc::invalid_parameter, "buchberger expects weighted-homogeneous input");
    }
    basis.push_back(g.monic());
  }
  if (basis.empty()) return {};
  for (const auto& g : basis) require_same_ring(basis.front().ring(), g.ring());
  const GradedRing& R = *basis.front().ring();

  std::set<Pair> pending;
  const auto push_pairs = [&](int n) {
    for (int i = 0; i < n; ++i) {
      const Monomial l = R.lcm(basis[i].leading_monomial(), basis[n].leading_monomial());
      pending.insert({l.degree, i, n});
    }
  };
  for (int n = 1; n < static_cast<int>(basis.size()); ++n) push_pairs(n);

  while (!pending.empty()) {
    const Pair p = *pending.begin();
    pending.erase(pending.begin());
    const Monomial& li = basis[p.i].leading_monomial();
    const Monomial& lj = basis[p.j].leading_monomial();
    if (R.coprime(li, lj)) continue;  // product criterion
    const Monomial l = R.lcm(li, lj);
    // chain criterion
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!R.divides(basis[k].leading_monomial(), l)) continue;
      const auto key = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return Pair{R.lcm(basis[a].leading_monomial(), basis[b].leading_monomial()).degree,
                    a, b};
      };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    Polynomial r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      push_pairs(static_cast<int>(basis.size()) - 1);
    }
  }

  basis = interreduce(std::move(basis));
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return R.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return basis;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_) require_same_ring(ring_, g.ring());
}

Ideal Ideal::with_groebner_basis(RingPtr ring, std::vector<Polynomial> generators,
                                 std::vector<Polynomial> basis) {
  Ideal I(std::move(ring), std::move(generators));
  I.basis_ = std::move(basis);
  I.basis_ready_ = true;
  return I;
}

Ideal::Ideal(const Ideal& o) : ring_(o.ring_), generators_(o.generators_) {
  std::lock_guard<std::mutex> lock(o.mutex_);
  basis_ready_ = o.basis_ready_;
  basis_ = o.basis_;
}

Ideal& Ideal::operator=(const Ideal& o) {
  if (this == &o) return *this;
  Ideal tmp(o);
  *this = std::move(tmp);
  return *this;
}

Ideal::Ideal(Ideal&& o) noexcept
    : ring_(std::move(o.ring_)), generators_(std::move(o.generators_)) {
  basis_ready_ = o.basis_ready_;
  basis_ = std::move(o.basis_);
}

Ideal& Ideal::operator=(Ideal&& o) noexcept {
  ring_ = std::move(o.ring_);
  generators_ = std::move(o.generators_);
  basis_ready_ = o.basis_ready_;
  basis_ = std::move(o.basis_);
  return *this;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!basis_ready_) {
    basis_ = buchberger(generators_);
    basis_ready_ = true;
  }
  return basis_;
}

bool Ideal::is_zero() const {
  for (const auto& g : generators_) {
    if (!g.is_zero()) return false;
  }
  return true;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  if (f.is_zero()) return true;
  return normal_form(f, groebner_basis()).is_zero();
}

namespace {

std::vector<Polynomial> minimalize(const RingPtr& ring, std::vector<Polynomial> gens) {
  const GradedRing& R = *ring;
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return R.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> kept;
  std::vector<Polynomial> kept_basis;
  for (auto& g : gens) {
    if (!kept.empty() && normal_form(g, kept_basis).is_zero()) continue;
    kept.push_back(g);
    kept_basis = buchberger(kept);
  }
  return kept;
}

}  // namespace

Ideal toric_ideal(const NumericalSemigroup& s) {
  return toric_ideal(s, GradedRing::for_semigroup(s));
}

Ideal toric_ideal(const NumericalSemigroup& s, RingPtr ring) {
  const auto& gens = s.minimal_generators();
  if (gens.size() < 2) {
    fail(errc::invalid_parameter, "toric ideal needs at least 2 minimal generators");
  }
  if (!ring) ring = GradedRing::for_semigroup(s);
  if (ring->nvars() != static_cast<int>(gens.size())) {
    fail(errc::ring_mismatch, "ring does not match the semigroup generators");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (ring->weights()[i] != gens[i]) {
      fail(errc::ring_mismatch, "ring weights must equal the semigroup generators");
    }
  }

  // Extended ring with a degree-1 parameter in front, block-eliminated first.
  std::vector<std::string> names = {"t"};
  std::vector<std::int64_t> weights = {1};
  for (int i = 0; i < ring->nvars(); ++i) {
    names.push_back(ring->variable_names()[i]);
    weights.push_back(ring->weights()[i]);
  }
  MonomialOrder order;
  order.elim_vars = 1;
  order.precedence = {0};
  for (int v : ring->order().precedence) order.precedence.push_back(v + 1);
  auto ext = std::make_shared<GradedRing>(std::move(names), std::move(weights),
                                          std::move(order));

  std::vector<Polynomial> relations;
  for (int j = 0; j < ring->nvars(); ++j) {
    Polynomial rel = Polynomial::variable(ext, j + 1) -
                     Polynomial::monomial(ext, 1, ext->variable(0, static_cast<int>(gens[j])));
    relations.push_back(std::move(rel));
  }
  std::vector<Polynomial> ext_basis = buchberger(std::move(relations));

  // The parameter-free part of the basis is a reduced basis of the kernel.
  std::vector<Polynomial> restricted;
  for (const auto& g : ext_basis) {
    if (g.leading_monomial().exp[0] != 0) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m;
      for (int i = 0; i < ring->nvars(); ++i) m.exp[i] = t.mono.exp[i + 1];
      m.degree = ring->weighted_degree(m);
      terms.push_back({t.coeff, m});
    }
    restricted.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }

  std::vector<Polynomial> minimal = minimalize(ring, restricted);
  return Ideal::with_groebner_basis(ring, std::move(minimal), std::move(restricted));
}

std::vector<Polynomial> minimal_generators(const Ideal& ideal) {
  return minimalize(ideal.ring(), ideal.groebner_basis());
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  return ideal.contains(f);
}

namespace {

// Largest subset of variables meeting no leading-term support, i.e. the
// dimension of the leading-term quotient.
int dimension_from_leading_terms(const GradedRing& R,
                                 const std::vector<Polynomial>& basis) {
  const int n = R.nvars();
  std::vector<unsigned> supports;
  supports.reserve(basis.size());
  for (const auto& g : basis) {
    unsigned mask = 0;
    for (int i = 0; i < n; ++i) {
      if (g.leading_monomial().exp[i]) mask |= 1u << i;
    }
    supports.push_back(mask);
  }
  int best = 0;
  for (unsigned sigma = 0; sigma < (1u << n); ++sigma) {
    bool ok = true;
    for (unsigned s : supports) {
      if ((s & ~sigma) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(sigma));
  }
  return best;
}

}  // namespace

int codimension(const Ideal& ideal) {
  const auto& basis = ideal.groebner_basis();
  if (basis.empty()) return 0;
  const GradedRing& R = *ideal.ring();
  for (const auto& g : basis) {
    if (g.is_constant()) return R.nvars();  // unit ideal
  }
  return R.nvars() - dimension_from_leading_terms(R, basis);
}

bool is_regular_sequence(const std::vector<Polynomial>& elements) {
  if (elements.empty()) return false;
  for (const auto& f : elements) {
    if (f.is_zero() || !f.is_homogeneous()) return false;
  }
  Ideal I(elements.front().ring(), elements);
  return codimension(I) == static_cast<int>(elements.size());
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      Polynomial h = f * g;
      if (!h.is_zero()) gens.push_back(std::move(h));
    }
  }
  return Ideal(a.ring(), std::move(gens));
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  for (const auto& f : a.generators()) {
    if (!b.contains(f)) return false;
  }
  for (const auto& g : b.generators()) {
    if (!a.contains(g)) return false;
  }
  return true;
}

}  // namespace nws
