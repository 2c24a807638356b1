#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "nws/polynomial.hpp"

namespace nws {

class NumericalSemigroup;

/// Remainder of f on full division by the reducers, tried in list order with
/// the leading term first. f - result lies in the ideal of the reducers and
/// no term of the result is divisible by any of their leading terms.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& reducers,
                       std::vector<Polynomial>* quotients = nullptr);

/// Reduced Groebner basis (monic, autoreduced, sorted by ascending leading
/// monomial). Inputs must be homogeneous in the weighted grading.
std::vector<Polynomial> buchberger(std::vector<Polynomial> generators);

/// Homogeneous ideal with a lazily cached reduced Groebner basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  /// Internal: attach an already computed reduced basis.
  static Ideal with_groebner_basis(RingPtr ring, std::vector<Polynomial> generators,
                                   std::vector<Polynomial> basis);

  Ideal(const Ideal& o);
  Ideal& operator=(const Ideal& o);
  Ideal(Ideal&& o) noexcept;
  Ideal& operator=(Ideal&& o) noexcept;

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& groebner_basis() const;
  bool is_zero() const;
  bool contains(const Polynomial& f) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  mutable std::mutex mutex_;
  mutable bool basis_ready_ = false;
  mutable std::vector<Polynomial> basis_;
};

/// Kernel of x_j -> t^{s_j}, computed by elimination in the weighted ring
/// extended by a degree-1 parameter. Generators are reduced to a minimal
/// homogeneous binomial generating set.
Ideal toric_ideal(const NumericalSemigroup& s);
Ideal toric_ideal(const NumericalSemigroup& s, RingPtr ring);

/// Greedy graded minimalization: keeps a generator only if it is not in the
/// ideal of the generators kept before it (degree-ascending sweep).
std::vector<Polynomial> minimal_generators(const Ideal& ideal);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);

/// Number of variables minus the Krull dimension of ring/ideal, read off the
/// leading-term ideal. Zero ideal -> 0, unit ideal -> number of variables.
int codimension(const Ideal& ideal);

/// For homogeneous elements of a polynomial ring this is equivalent to the
/// ideal they generate having codimension equal to their number.
bool is_regular_sequence(const std::vector<Polynomial>& elements);

Ideal ideal_product(const Ideal& a, const Ideal& b);
bool ideal_equals(const Ideal& a, const Ideal& b);

}  // namespace nws
