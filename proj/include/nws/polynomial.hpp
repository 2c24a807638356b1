#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nws/ring.hpp"

namespace nws {

struct Term {
  mpq_class coeff;
  Monomial mono;
};

/// Exact multivariate polynomial over the rationals. Terms are kept strictly
/// descending in the ring's monomial order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, mpq_class value);
  static Polynomial monomial(RingPtr ring, mpq_class coeff, Monomial mono);
  static Polynomial variable(RingPtr ring, int index, int power = 1,
                             mpq_class coeff = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const mpq_class& leading_coefficient() const { return leading_term().coeff; }

  bool is_homogeneous() const;
  /// Weighted degree when homogeneous (the zero polynomial has none).
  std::optional<std::int64_t> homogeneous_degree() const;
  /// Degree of the leading term; requires a nonzero polynomial.
  std::int64_t degree() const { return leading_term().mono.degree; }
  bool is_constant() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial times_term(const mpq_class& coeff, const Monomial& mono) const;
  Polynomial times(const mpq_class& scalar) const;
  Polynomial monic() const;

  std::string to_string() const;
  static Polynomial parse(RingPtr ring, std::string_view text);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace nws
