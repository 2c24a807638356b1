#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nws/ideal.hpp"

namespace nws {

struct GradedFreeModule {
  std::vector<std::int64_t> shifts;  // degree of each basis element
  int rank() const { return static_cast<int>(shifts.size()); }
};

/// Homogeneous map of graded free modules. Entry (i,j) is zero or homogeneous
/// of formal degree source.shifts[j] - target.shifts[i]; negative formal
/// degree forces a zero entry.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(RingPtr ring, GradedFreeModule target, GradedFreeModule source,
               std::vector<std::vector<Polynomial>> entries);

  const RingPtr& ring() const { return ring_; }
  const GradedFreeModule& target() const { return target_; }
  const GradedFreeModule& source() const { return source_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }
  const Polynomial& entry(int i, int j) const { return entries_[i][j]; }
  std::int64_t formal_degree(int i, int j) const {
    return source_.shifts[j] - target_.shifts[i];
  }

  GradedMatrix submatrix(const std::vector<int>& row_indices,
                         const std::vector<int>& col_indices) const;
  bool is_zero() const;

 private:
  RingPtr ring_;
  GradedFreeModule target_;
  GradedFreeModule source_;
  std::vector<std::vector<Polynomial>> entries_;
};

GradedMatrix matrix_product(const GradedMatrix& a, const GradedMatrix& b);

/// matrices[k] is the map F_{k+1} -> F_k of a complex resolving ring/ideal,
/// with F_0 free of rank 1.
struct FreeResolution {
  RingPtr ring;
  std::vector<GradedMatrix> matrices;
  bool minimal = false;

  int length() const { return static_cast<int>(matrices.size()); }
  /// F_k; module(0) is the rank-1 cover.
  const GradedFreeModule& module(int k) const {
    return k == 0 ? matrices.front().target() : matrices[k - 1].source();
  }
};

/// Minimal graded free resolution of ring/ideal, built by iterated Schreyer
/// syzygies from the reduced basis and then pruned of constant entries.
FreeResolution minimal_free_resolution(const Ideal& ideal);

/// Rank list of the resolution's free modules, leading rank-1 cover included,
/// trailing zero modules suppressed.
std::vector<int> betti_format(const FreeResolution& resolution);

std::vector<std::vector<std::int64_t>> formal_degree_table(const GradedMatrix& m);

/// Rank over the fraction field, by fraction-free elimination with exact
/// polynomial arithmetic and first-nonzero (row-major) pivoting.
int rank_of_matrix(const GradedMatrix& m);

Polynomial matrix_determinant(const RingPtr& ring,
                              const std::vector<std::vector<Polynomial>>& grid);

/// Ideal of all r x r minors.
Ideal minors_ideal(const GradedMatrix& m, int r);

/// First syzygy module of a Groebner basis of ring elements, as the columns
/// of a graded matrix. Throws NotGroebner when the input is not a basis.
GradedMatrix syzygies(const std::vector<Polynomial>& basis);

struct ExactnessStep {
  int index = 0;  // k, 1-based along the complex
  int rank = 0;
  int source_rank = 0;
  bool additivity = false;
  std::optional<int> minors_codim;  // absent when rank is 0
  bool codim_ok = false;
};

struct ExactnessEvidence {
  bool exact = false;
  std::vector<ExactnessStep> steps;
};

/// Buchsbaum-Eisenbud exactness test for a complex of free modules
/// (compositions must vanish; NotAComplex otherwise).
ExactnessEvidence be_exactness(const std::vector<GradedMatrix>& complex);

struct MinorIdentityResult {
  bool holds = false;
  mpq_class unit = 0;
  int pairs_checked = 0;
  std::string failure;
};

/// For a length-3 complex with modules of ranks 1, n, n, 1: the product of
/// the complementary subdeterminants of the outer maps equals the inner
/// subdeterminant up to one global unit across all index pairs.
MinorIdentityResult be_minor_identity(const GradedMatrix& phi1, const GradedMatrix& phi2,
                                      const GradedMatrix& phi3);

/// Block text rendering (first map transposed beside the middle map, last
/// map transposed below) for eyeballing resolutions of cyclic modules.
std::string render_block_layout(const FreeResolution& resolution);

}  // namespace nws
