#include "nws/modules.hpp"

#include <algorithm>
#include <map>

namespace nws {

std::shared_ptr<const ModuleOrder> ModuleOrder::base(RingPtr ring) {
  auto order = std::shared_ptr<ModuleOrder>(new ModuleOrder());
  order->ring_ = std::move(ring);
  return order;
}

std::shared_ptr<const ModuleOrder> ModuleOrder::schreyer(
    std::shared_ptr<const ModuleOrder> parent,
    std::vector<std::pair<Monomial, int>> leads) {
  auto order = std::shared_ptr<ModuleOrder>(new ModuleOrder());
  order->ring_ = parent->ring();
  order->parent_ = std::move(parent);
  order->leads_ = std::move(leads);
  return order;
}

int ModuleOrder::compare(const Monomial& ma, int pa, const Monomial& mb, int pb) const {
  if (!parent_) {
    const int c = ring_->compare(ma, mb);
    if (c) return c;
    if (pa != pb) return pa < pb ? 1 : -1;  // earlier position is larger
    return 0;
  }
  const Monomial a = ring_->mul(ma, leads_[pa].first);
  const Monomial b = ring_->mul(mb, leads_[pb].first);
  const int c = parent_->compare(a, leads_[pa].second, b, leads_[pb].second);
  if (c) return c;
  if (pa != pb) return pa < pb ? 1 : -1;
  return 0;
}

ModPoly mod_poly_from_terms(const ModuleOrder& order, std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
    return order.compare(a.mono, a.pos, b.mono, b.pos) > 0;
  });
  ModPoly p;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!p.terms.empty() && p.terms.back().pos == t.pos &&
        p.terms.back().mono == t.mono) {
      p.terms.back().coeff += t.coeff;
      if (p.terms.back().coeff == 0) p.terms.pop_back();
    } else {
      p.terms.push_back(std::move(t));
    }
  }
  return p;
}

ModPoly mod_sub(const ModuleOrder& order, const ModPoly& a, const ModPoly& b) {
  ModPoly out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    const ModTerm& ta = a.terms[i];
    const ModTerm& tb = b.terms[j];
    const int c = order.compare(ta.mono, ta.pos, tb.mono, tb.pos);
    if (c > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.terms.push_back({-tb.coeff, tb.mono, tb.pos});
      ++j;
    } else {
      mpq_class diff = ta.coeff - tb.coeff;
      if (diff != 0) out.terms.push_back({std::move(diff), ta.mono, ta.pos});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) {
    out.terms.push_back({-b.terms[j].coeff, b.terms[j].mono, b.terms[j].pos});
  }
  return out;
}

ModPoly mod_times_term(const GradedRing& R, const ModPoly& a, const mpq_class& c,
                       const Monomial& m) {
  ModPoly out;
  if (c == 0) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    out.terms.push_back({t.coeff * c, R.mul(t.mono, m), t.pos});
  }
  return out;
}

bool mod_equal(const ModPoly& a, const ModPoly& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].pos != b.terms[i].pos || !(a.terms[i].mono == b.terms[i].mono) ||
        a.terms[i].coeff != b.terms[i].coeff) {
      return false;
    }
  }
  return true;
}

ModPoly module_normal_form(const ModPoly& f, const ModuleGB& G,
                           std::vector<Polynomial>* quotients) {
  const GradedRing& R = *G.ring;
  if (quotients) quotients->assign(G.elements.size(), Polynomial(G.ring));
  ModPoly h = f;
  std::vector<ModTerm> remainder;
  while (!h.is_zero()) {
    const ModTerm& lead = h.leading_term();
    bool reduced = false;
    for (std::size_t k = 0; k < G.elements.size(); ++k) {
      const ModPoly& g = G.elements[k];
      if (g.is_zero()) continue;
      const ModTerm& gl = g.leading_term();
      if (gl.pos != lead.pos || !R.divides(gl.mono, lead.mono)) continue;
      const mpq_class c = lead.coeff / gl.coeff;
      const Monomial m = R.div(lead.mono, gl.mono);
      h = mod_sub(*G.order, h, mod_times_term(R, g, c, m));
      if (quotients) {
        (*quotients)[k] = (*quotients)[k] + Polynomial::monomial(G.ring, c, m);
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lead);
      ModPoly single;
      single.terms.push_back(lead);
      h = mod_sub(*G.order, h, single);
    }
  }
  ModPoly r;
  r.terms = std::move(remainder);
  return r;
}

bool module_member(const ModPoly& f, const ModuleGB& G) {
  return module_normal_form(f, G).is_zero();
}

std::vector<ModPoly> schreyer_syzygies(const ModuleGB& G) {
  const GradedRing& R = *G.ring;
  const int n = static_cast<int>(G.elements.size());

  std::vector<std::pair<Monomial, int>> leads;
  leads.reserve(G.elements.size());
  for (const auto& g : G.elements) {
    leads.emplace_back(g.leading_term().mono, g.leading_term().pos);
  }
  auto syz_order = ModuleOrder::schreyer(G.order, leads);

  struct PairKey {
    std::int64_t degree;
    int i, j;
    bool operator<(const PairKey& o) const {
      if (degree != o.degree) return degree < o.degree;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::vector<PairKey> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (leads[i].second != leads[j].second) continue;
      const Monomial l = R.lcm(leads[i].first, leads[j].first);
      pairs.push_back({l.degree + G.target_shifts[leads[i].second], i, j});
    }
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<ModPoly> syzygies;
  for (const auto& p : pairs) {
    const Monomial l = R.lcm(leads[p.i].first, leads[p.j].first);
    const Monomial mi = R.div(l, leads[p.i].first);
    const Monomial mj = R.div(l, leads[p.j].first);
    const mpq_class ci = mpq_class(1) / G.elements[p.i].leading_term().coeff;
    const mpq_class cj = mpq_class(1) / G.elements[p.j].leading_term().coeff;
    ModPoly s = mod_sub(*G.order, mod_times_term(R, G.elements[p.i], ci, mi),
                        mod_times_term(R, G.elements[p.j], cj, mj));
    std::vector<Polynomial> q;
    ModPoly rem = module_normal_form(s, G, &q);
    if (!rem.is_zero()) {
      fail(errc::not_groebner, "S-pair does not reduce to zero");
    }
    std::vector<ModTerm> terms;
    terms.push_back({ci, mi, p.i});
    terms.push_back({-cj, mj, p.j});
    for (int k = 0; k < n; ++k) {
      for (const auto& t : q[k].terms()) {
        terms.push_back({-t.coeff, t.mono, k});
      }
    }
    ModPoly syz = mod_poly_from_terms(*syz_order, std::move(terms));
    if (!syz.is_zero()) syzygies.push_back(std::move(syz));
  }
  return syzygies;
}

}  // namespace nws
