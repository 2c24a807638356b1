#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nws/resolution.hpp"
#include "nws/semigroup.hpp"

namespace nws {

/// How the acyclicity of the distinguished rank-(1,4,4,1) subcomplex was
/// established.
struct Condition3Evidence {
  enum class Route {
    tail_minors,       // 2x2 minors of the complementary block of the last map
    good_pattern,      // zero pair + regular pair + matching column minors
    direct_exactness,  // rank additivity and minor codimensions
  };
  Route route = Route::direct_exactness;
  std::optional<int> tail_minors_codim;
  int pattern_last_row = -1;                 // row of the 4x4 block (0..3)
  std::array<int, 2> pattern_zero_cols{-1, -1};
  std::array<int, 2> pattern_regular_cols{-1, -1};
  std::optional<ExactnessEvidence> exactness;
};

/// Witness that a semigroup is degree-special: a distinguished column of the
/// last differential supported in exactly four rows, two rows of the middle
/// differential vanishing on those columns, and evidence that the induced
/// subcomplex is acyclic.
struct DegreeSpecialCertificate {
  int distinguished_column = -1;
  std::array<int, 4> support_rows{};   // rows of the last map / columns of the middle map
  std::array<int, 2> zero_rows{};      // dropped generators
  std::array<int, 4> kept_rows{};      // generators of the subcomplex
  Condition3Evidence condition3;
  std::vector<Polynomial> regular_sequence_witness;  // the four entries of the column
};

struct Verdict {
  enum class Status { not_weierstrass, unknown };
  struct Reason {
    std::string criterion;
    std::string summary;
  };
  Status status = Status::unknown;
  std::vector<Reason> reasons;
};

/// Toric ideal, minimal resolution and rank list of a semigroup with at
/// least two minimal generators.
struct ResolutionBundle {
  Ideal ideal;
  FreeResolution resolution;
  std::vector<int> betti;
};

std::optional<ResolutionBundle> resolve_semigroup(const NumericalSemigroup& s);

/// Searches the three columns of the last differential, in order, for a
/// complete degree-special certificate. Requires exactly four minimal
/// generators and rank list {1,6,8,3}; returns the first certificate found.
std::optional<DegreeSpecialCertificate> find_degree_special_certificate(
    const NumericalSemigroup& s);
std::optional<DegreeSpecialCertificate> search_certificate(
    const FreeResolution& resolution, std::int64_t multiplicity);

/// Re-checks every certified condition from scratch against the resolution.
bool revalidate_certificate(const FreeResolution& resolution, std::int64_t multiplicity,
                            const DegreeSpecialCertificate& certificate);

/// The subcomplex named by a certificate: maps of shapes 1x4, 4x4, 4x1.
std::array<GradedMatrix, 3> certificate_subcomplex(
    const FreeResolution& resolution, const DegreeSpecialCertificate& certificate);

/// Entries of the middle subcomplex map lie in the ideal J of the witness
/// column and entries of the first map lie in J^2.
bool verify_1441_structure(const FreeResolution& resolution,
                           const DegreeSpecialCertificate& certificate);

struct BuchweitzEvidence {
  int n = 2;
  std::int64_t count = 0;  // distinct n-fold sums of gaps
  std::int64_t bound = 0;  // (2n-1)(g-1)
  bool witness = false;    // count > bound
  bool beyond_stated_case = false;  // n != 2 extension
};

/// Counts n-fold gap sums (repetition allowed) against the bound (2n-1)(g-1).
/// Requires genus >= 2.
BuchweitzEvidence buchweitz_counts(const NumericalSemigroup& s, int n = 2);
std::optional<BuchweitzEvidence> buchweitz_test(const NumericalSemigroup& s, int n = 2);

struct CastelnuovoData {
  std::int64_t d = 0;
  int r = 0;
  std::int64_t n = 0;
  std::int64_t epsilon = 0;
  std::int64_t pi0 = 0;
  /// epsilon == r-2, the top of the admitted range.
  bool epsilon_at_upper_end = false;
};

/// Genus bound pi0(d, r) for nondegenerate degree-d curves in projective
/// r-space: write d-1 = n(r-1) + epsilon with 0 <= epsilon <= r-2, then
/// pi0 = (r-1)n(n-1)/2 + n*epsilon.
CastelnuovoData castelnuovo(std::int64_t d, int r);
std::int64_t castelnuovo_pi0(std::int64_t d, int r);

/// genus(lprime) > pi0(d, r)?
bool torres_bound_check(const NumericalSemigroup& lprime, std::int64_t d, int r);

/// The semigroup <6, 9, 12+c, 15+c>; requires c >= 1 and c not divisible by 3.
NumericalSemigroup family_6_9(std::int64_t c);

Verdict certify_not_weierstrass(const NumericalSemigroup& s);

struct ConjectureScanResult {
  /// Semigroups whose resolution passes the two combinatorial degree
  /// conditions on some column.
  std::vector<NumericalSemigroup> satisfying_conditions_12;
  /// Those where no such column yields an acyclic subcomplex.
  std::vector<NumericalSemigroup> counterexample_candidates;
  std::int64_t examined = 0;
};

/// Exhaustive search for semigroups meeting the combinatorial conditions but
/// failing acyclicity; any hit is reported, never suppressed.
ConjectureScanResult conjecture_scan(int max_genus,
                                     std::int64_t node_cap = 10'000'000);

}  // namespace nws
