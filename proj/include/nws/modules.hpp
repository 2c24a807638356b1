#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "nws/polynomial.hpp"

namespace nws {

/// Term of a free-module element: coefficient, ring monomial, basis position.
struct ModTerm {
  mpq_class coeff;
  Monomial mono;
  int pos = 0;
};

/// Element of a free module, terms strictly descending in the ambient
/// module order.
struct ModPoly {
  std::vector<ModTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const ModTerm& leading_term() const { return terms.front(); }
};

/// Module monomial order. The base order compares ring monomials and breaks
/// ties by ascending position; a Schreyer order maps a term m*e_i to
/// m*lead(g_i) one level down and compares there, again breaking ties by
/// position.
class ModuleOrder {
 public:
  static std::shared_ptr<const ModuleOrder> base(RingPtr ring);
  static std::shared_ptr<const ModuleOrder> schreyer(
      std::shared_ptr<const ModuleOrder> parent,
      std::vector<std::pair<Monomial, int>> leads);

  int compare(const Monomial& ma, int pa, const Monomial& mb, int pb) const;
  const RingPtr& ring() const { return ring_; }

 private:
  ModuleOrder() = default;
  RingPtr ring_;
  std::shared_ptr<const ModuleOrder> parent_;
  std::vector<std::pair<Monomial, int>> leads_;
};

/// A Groebner basis of a submodule of a graded free module.
struct ModuleGB {
  RingPtr ring;
  std::shared_ptr<const ModuleOrder> order;
  std::vector<std::int64_t> target_shifts;  // degree of each basis position
  std::vector<ModPoly> elements;            // monic

  /// Weighted degree of a homogeneous element.
  std::int64_t element_degree(const ModPoly& e) const {
    return e.terms.front().mono.degree + target_shifts[e.terms.front().pos];
  }
};

ModPoly mod_poly_from_terms(const ModuleOrder& order, std::vector<ModTerm> terms);
ModPoly mod_sub(const ModuleOrder& order, const ModPoly& a, const ModPoly& b);
ModPoly mod_times_term(const GradedRing& R, const ModPoly& a, const mpq_class& c,
                       const Monomial& m);
bool mod_equal(const ModPoly& a, const ModPoly& b);

/// Full normal form of f against G; optionally tracks the quotients (one ring
/// polynomial per element of G).
ModPoly module_normal_form(const ModPoly& f, const ModuleGB& G,
                           std::vector<Polynomial>* quotients = nullptr);

bool module_member(const ModPoly& f, const ModuleGB& G);

/// All S-pair syzygies of G, expressed in the free module with one basis
/// element per member of G and sorted deterministically. Homogeneous when G
/// is. Throws NotGroebner if an S-pair fails to reduce to zero.
std::vector<ModPoly> schreyer_syzygies(const ModuleGB& G);

}  // namespace nws
