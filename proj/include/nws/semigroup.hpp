#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nws/errors.hpp"

namespace nws {

/// A numerical semigroup: a cofinite subset of the non-negative integers
/// containing 0 and closed under addition. Immutable after construction.
class NumericalSemigroup {
 public:
  /// Builds the semigroup generated by `raw`, reducing to the unique
  /// minimal generating set and populating all derived invariants.
  static NumericalSemigroup from_generators(std::vector<std::int64_t> raw);

  const std::vector<std::int64_t>& minimal_generators() const { return generators_; }
  std::int64_t multiplicity() const { return multiplicity_; }
  /// Largest gap; -1 when the semigroup is all of the non-negative integers.
  std::int64_t frobenius() const { return frobenius_; }
  const std::vector<std::int64_t>& gaps() const { return gaps_; }
  std::int64_t genus() const { return static_cast<std::int64_t>(gaps_.size()); }
  /// apery()[i] is the least element congruent to i modulo the multiplicity.
  const std::vector<std::int64_t>& apery() const { return apery_; }

  bool contains(std::int64_t n) const;

  std::string to_compact_string() const;  // "<6,9,13,16>"
  static NumericalSemigroup parse_compact(std::string_view text);

  bool operator==(const NumericalSemigroup& other) const {
    return generators_ == other.generators_;
  }

 private:
  friend class GenusTree;
  NumericalSemigroup() = default;

  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> gaps_;
  std::vector<std::int64_t> apery_;
  std::int64_t multiplicity_ = 1;
  std::int64_t frobenius_ = -1;
};

/// Semigroup generated by the doubled minimal generators of `base` together
/// with the odd number 2x+1.
NumericalSemigroup double_plus_odd(const NumericalSemigroup& base, std::int64_t x);

struct EnumerateOptions {
  std::int64_t node_cap = 10'000'000;
  /// 0 = unbounded. Multiplicity never decreases down the genus tree, so a
  /// positive bound prunes whole subtrees.
  std::int64_t max_multiplicity = 0;
  /// 0 = no filter; otherwise only semigroups with exactly this many minimal
  /// generators are passed to the visitor.
  int generator_count = 0;
  std::int64_t min_multiplicity = 0;
};

/// Depth-first walk of the genus tree (children of S remove one minimal
/// generator exceeding the Frobenius number, visited in ascending order).
/// Visits every numerical semigroup of genus <= max_genus exactly once,
/// subject to the filters; the visitor returns false to stop early.
void enumerate_by_genus(int max_genus, const EnumerateOptions& options,
                        const std::function<bool(const NumericalSemigroup&)>& visit);

/// Number of numerical semigroups of each genus 0..max_genus.
std::vector<std::int64_t> count_by_genus(int max_genus,
                                         std::int64_t node_cap = 10'000'000);

}  // namespace nws
