#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nws/errors.hpp"

namespace nws {

class NumericalSemigroup;

inline constexpr int kMaxVars = 8;

/// Exponent vector with cached weighted degree. The owning ring interprets it.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::int64_t degree = 0;

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool is_one() const {
    for (auto e : exp) {
      if (e) return false;
    }
    return true;
  }
};

/// Weighted-degree order refined reverse-lexicographically along an explicit
/// variable precedence (highest first). When elim_vars > 0 the total exponent
/// of the first elim_vars variables is compared before anything else, giving
/// a block elimination order.
struct MonomialOrder {
  std::vector<int> precedence;
  int elim_vars = 0;
};

class GradedRing {
 public:
  GradedRing(std::vector<std::string> names, std::vector<std::int64_t> weights,
             MonomialOrder order);

  /// Ring presentation of a semigroup: one variable per minimal generator,
  /// named by the generator's residue class modulo the multiplicity and
  /// weighted by the generator itself. Default precedence is descending
  /// residue class.
  static std::shared_ptr<const GradedRing> for_semigroup(const NumericalSemigroup& s);
  static std::shared_ptr<const GradedRing> for_semigroup(const NumericalSemigroup& s,
                                                         std::vector<int> precedence);

  int nvars() const { return static_cast<int>(weights_.size()); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  int variable_index(std::string_view name) const;

  Monomial one() const { return Monomial{}; }
  Monomial variable(int index, int power = 1) const;
  Monomial make_monomial(const std::vector<std::int64_t>& exponents) const;
  std::int64_t weighted_degree(const Monomial& m) const;

  /// -1, 0 or +1.
  int compare(const Monomial& a, const Monomial& b) const;
  bool divides(const Monomial& a, const Monomial& b) const;  // a | b
  bool coprime(const Monomial& a, const Monomial& b) const;
  Monomial mul(const Monomial& a, const Monomial& b) const;
  Monomial div(const Monomial& a, const Monomial& b) const;  // requires b | a
  Monomial lcm(const Monomial& a, const Monomial& b) const;

  bool structurally_equal(const GradedRing& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::int64_t> weights_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->structurally_equal(*b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) fail(errc::ring_mismatch, "operands live in different rings");
}

}  // namespace nws
