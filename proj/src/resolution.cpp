#include "nws/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nws/modules.hpp"

namespace nws {

GradedMatrix::GradedMatrix(RingPtr ring, GradedFreeModule target,
                           GradedFreeModule source,
                           std::vector<std::vector<Polynomial>> entries)
    : ring_(std::move(ring)),
      target_(std::move(target)),
      source_(std::move(source)),
      entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != target_.rank()) {
    fail(errc::invalid_parameter, "matrix row count does not match target rank");
  }
  for (int i = 0; i < rows(); ++i) {
    if (static_cast<int>(entries_[i].size()) != source_.rank()) {
      fail(errc::invalid_parameter, "matrix column count does not match source rank");
    }
    for (int j = 0; j < cols(); ++j) {
      Polynomial& e = entries_[i][j];
      if (e.is_zero()) {
        if (!e.ring()) e = Polynomial(ring_);
        continue;
      }
      require_same_ring(ring_, e.ring());
      const auto d = e.homogeneous_degree();
      if (!d || *d != formal_degree(i, j)) {
        fail(errc::invalid_parameter,
             "entry (" + std::to_string(i) + "," + std::to_string(j) +
                 ") is not homogeneous of its formal degree");
      }
    }
  }
}

GradedMatrix GradedMatrix::submatrix(const std::vector<int>& row_indices,
                                     const std::vector<int>& col_indices) const {
  GradedFreeModule target, source;
  for (int i : row_indices) target.shifts.push_back(target_.shifts.at(i));
  for (int j : col_indices) source.shifts.push_back(source_.shifts.at(j));
  std::vector<std::vector<Polynomial>> grid;
  grid.reserve(row_indices.size());
  for (int i : row_indices) {
    std::vector<Polynomial> row;
    row.reserve(col_indices.size());
    for (int j : col_indices) row.push_back(entries_[i][j]);
    grid.push_back(std::move(row));
  }
  return GradedMatrix(ring_, std::move(target), std::move(source), std::move(grid));
}

bool GradedMatrix::is_zero() const {
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

GradedMatrix matrix_product(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.cols() != b.rows()) fail(errc::invalid_parameter, "matrix shape mismatch");
  std::vector<std::vector<Polynomial>> grid(
      a.rows(), std::vector<Polynomial>(b.cols(), Polynomial(a.ring())));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      Polynomial acc(a.ring());
      for (int k = 0; k < a.cols(); ++k) {
        if (a.entry(i, k).is_zero() || b.entry(k, j).is_zero()) continue;
        acc = acc + a.entry(i, k) * b.entry(k, j);
      }
      grid[i][j] = std::move(acc);
    }
  }
  return GradedMatrix(a.ring(), a.target(), b.source(), std::move(grid));
}

namespace {

// Raw complex representation used while building and pruning: shifts[k] are
// the degrees of the basis of F_k, grids[k] holds the map F_{k+1} -> F_k.
struct RawComplex {
  RingPtr ring;
  std::vector<std::vector<std::int64_t>> shifts;     // F_0 .. F_L
  std::vector<std::vector<std::vector<Polynomial>>> grids;  // phi_1 .. phi_L
};

Polynomial& raw_entry(RawComplex& c, int k, int i, int j) { return c.grids[k][i][j]; }

// Splits off the unit at (i, j) of phi_{k+1} (0-based k into grids) and drops
// the corresponding basis elements.
void cancel_unit(RawComplex& c, int k, int i, int j) {
  auto& M = c.grids[k];
  const int rows = static_cast<int>(M.size());
  const int cols = static_cast<int>(M[0].size());
  const RingPtr& ring = c.ring;

  const mpq_class pivot = M[i][j].leading_coefficient();
  // Scale column j so the pivot is 1; mirror as a row operation one level up.
  for (int r = 0; r < rows; ++r) M[r][j] = M[r][j].times(mpq_class(1) / pivot);
  if (k + 1 < static_cast<int>(c.grids.size())) {
    auto& N = c.grids[k + 1];
    for (std::size_t col = 0; col < N[j].size(); ++col) {
      N[j][col] = N[j][col].times(pivot);
    }
  }
  // Clear the pivot row by column operations.
  for (int l = 0; l < cols; ++l) {
    if (l == j || M[i][l].is_zero()) continue;
    const Polynomial a = M[i][l];
    for (int r = 0; r < rows; ++r) M[r][l] = M[r][l] - a * M[r][j];
    if (k + 1 < static_cast<int>(c.grids.size())) {
      auto& N = c.grids[k + 1];
      for (std::size_t col = 0; col < N[j].size(); ++col) {
        N[j][col] = N[j][col] + a * N[l][col];
      }
    }
  }
  // Clear the pivot column by row operations.
  for (int r = 0; r < rows; ++r) {
    if (r == i || M[r][j].is_zero()) continue;
    const Polynomial b = M[r][j];
    for (int l = 0; l < cols; ++l) M[r][l] = M[r][l] - b * M[i][l];
    if (k > 0) {
      auto& P = c.grids[k - 1];
      for (auto& row : P) row[i] = row[i] + b * row[r];
    }
  }
  // The mirrored operations have zeroed row j one level up and column i one
  // level down; drop the split-off pair of basis elements.
  if (k + 1 < static_cast<int>(c.grids.size())) {
    auto& N = c.grids[k + 1];
    for (const auto& e : N[j]) {
      if (!e.is_zero()) fail(errc::invalid_parameter, "cancellation left a nonzero row");
    }
    N.erase(N.begin() + j);
  }
  if (k > 0) {
    auto& P = c.grids[k - 1];
    for (auto& row : P) {
      if (!row[i].is_zero()) fail(errc::invalid_parameter, "cancellation left a nonzero column");
      row.erase(row.begin() + i);
    }
  }
  M.erase(M.begin() + i);
  for (auto& row : M) row.erase(row.begin() + j);
  c.shifts[k].erase(c.shifts[k].begin() + i);      // basis of F_k
  c.shifts[k + 1].erase(c.shifts[k + 1].begin() + j);  // basis of F_{k+1}
  (void)ring;
}

void minimalize(RawComplex& c) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k < static_cast<int>(c.grids.size()) && !changed; ++k) {
      auto& M = c.grids[k];
      for (int i = 0; i < static_cast<int>(M.size()) && !changed; ++i) {
        for (int j = 0; j < static_cast<int>(M[i].size()) && !changed; ++j) {
          if (M[i][j].is_constant()) {
            cancel_unit(c, k, i, j);
            changed = true;
          }
        }
      }
    }
  }
  // Drop trailing zero modules.
  while (!c.grids.empty() && c.shifts.back().empty()) {
    c.grids.pop_back();
    c.shifts.pop_back();
  }
}

void sort_bases(RawComplex& c) {
  for (std::size_t k = 1; k < c.shifts.size(); ++k) {
    auto& s = c.shifts[k];
    std::vector<int> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return s[a] < s[b]; });
    std::vector<std::int64_t> new_shifts(s.size());
    for (std::size_t p = 0; p < perm.size(); ++p) new_shifts[p] = s[perm[p]];
    s = std::move(new_shifts);
    // Columns of phi_k and rows of phi_{k+1} follow the basis of F_k.
    auto& M = c.grids[k - 1];
    for (auto& row : M) {
      std::vector<Polynomial> new_row(row.size());
      for (std::size_t p = 0; p < perm.size(); ++p) new_row[p] = std::move(row[perm[p]]);
      row = std::move(new_row);
    }
    if (k < c.grids.size()) {
      auto& N = c.grids[k];
      std::vector<std::vector<Polynomial>> new_rows(N.size());
      for (std::size_t p = 0; p < perm.size(); ++p) new_rows[p] = std::move(N[perm[p]]);
      N = std::move(new_rows);
    }
  }
}

FreeResolution assemble(RawComplex c, bool minimal) {
  FreeResolution res;
  res.ring = c.ring;
  res.minimal = minimal;
  for (std::size_t k = 0; k < c.grids.size(); ++k) {
    GradedFreeModule target{c.shifts[k]};
    GradedFreeModule source{c.shifts[k + 1]};
    res.matrices.emplace_back(c.ring, std::move(target), std::move(source),
                              std::move(c.grids[k]));
  }
  for (std::size_t k = 0; k + 1 < res.matrices.size(); ++k) {
    if (!matrix_product(res.matrices[k], res.matrices[k + 1]).is_zero()) {
      fail(errc::not_a_complex, "consecutive maps do not compose to zero");
    }
  }
  return res;
}

// Lexicographic comparison on raw exponents, used only to order basis
// elements for the syzygy iteration.
bool lex_greater(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  }
  return false;
}

void sort_level(std::vector<ModPoly>& elems) {
  std::stable_sort(elems.begin(), elems.end(), [](const ModPoly& x, const ModPoly& y) {
    const ModTerm& a = x.leading_term();
    const ModTerm& b = y.leading_term();
    if (a.pos != b.pos) return a.pos < b.pos;
    return lex_greater(a.mono, b.mono);
  });
}

}  // namespace

FreeResolution minimal_free_resolution(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (!ring) fail(errc::invalid_parameter, "ideal has no ring");
  std::vector<Polynomial> basis = ideal.groebner_basis();
  for (const auto& g : basis) {
    if (g.is_constant()) fail(errc::invalid_parameter, "resolution needs a proper ideal");
  }

  RawComplex raw;
  raw.ring = ring;
  raw.shifts.push_back({0});
  if (basis.empty()) {
    FreeResolution res;
    res.ring = ring;
    res.minimal = true;
    return res;
  }

  ModuleGB level;
  level.ring = ring;
  level.order = ModuleOrder::base(ring);
  level.target_shifts = {0};
  for (const auto& g : basis) {
    ModPoly e;
    for (const auto& t : g.terms()) e.terms.push_back({t.coeff, t.mono, 0});
    level.elements.push_back(std::move(e));
  }
  sort_level(level.elements);

  const int max_levels = ring->nvars() + 3;
  for (int depth = 0; depth < max_levels; ++depth) {
    // Matrix of the current level's elements over the previous basis.
    const int rows = static_cast<int>(level.target_shifts.size());
    const int cols = static_cast<int>(level.elements.size());
    std::vector<std::vector<Polynomial>> grid(
        rows, std::vector<Polynomial>(cols, Polynomial(ring)));
    std::vector<std::int64_t> col_shifts;
    for (int j = 0; j < cols; ++j) {
      std::vector<std::vector<Term>> per_row(rows);
      for (const auto& t : level.elements[j].terms) {
        per_row[t.pos].push_back({t.coeff, t.mono});
      }
      for (int i = 0; i < rows; ++i) {
        grid[i][j] = Polynomial::from_terms(ring, std::move(per_row[i]));
      }
      col_shifts.push_back(level.element_degree(level.elements[j]));
    }
    raw.grids.push_back(std::move(grid));
    raw.shifts.push_back(std::move(col_shifts));

    std::vector<ModPoly> syz = schreyer_syzygies(level);
    if (syz.empty()) break;

    std::vector<std::pair<Monomial, int>> leads;
    for (const auto& g : level.elements) {
      leads.emplace_back(g.leading_term().mono, g.leading_term().pos);
    }
    ModuleGB next;
    next.ring = ring;
    next.order = ModuleOrder::schreyer(level.order, std::move(leads));
    next.target_shifts = raw.shifts.back();
    for (auto& s : syz) {
      // Normalize to a monic leading coefficient for determinism.
      ModPoly e = s;
      const mpq_class lc = e.leading_term().coeff;
      for (auto& t : e.terms) t.coeff /= lc;
      next.elements.push_back(std::move(e));
    }
    sort_level(next.elements);
    level = std::move(next);
    if (depth + 1 == max_levels) {
      fail(errc::resource_limit, "resolution did not terminate");
    }
  }

  minimalize(raw);
  sort_bases(raw);
  FreeResolution res = assemble(std::move(raw), true);
  for (const auto& m : res.matrices) {
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        if (m.entry(i, j).is_constant()) {
          fail(errc::invalid_parameter, "minimalization left a constant entry");
        }
      }
    }
  }
  return res;
}

std::vector<int> betti_format(const FreeResolution& resolution) {
  if (!resolution.minimal) fail(errc::not_minimal, "betti format needs a minimal resolution");
  std::vector<int> format = {1};
  for (const auto& m : resolution.matrices) format.push_back(m.cols());
  while (format.size() > 1 && format.back() == 0) format.pop_back();
  return format;
}

std::vector<std::vector<std::int64_t>> formal_degree_table(const GradedMatrix& m) {
  std::vector<std::vector<std::int64_t>> table(
      m.rows(), std::vector<std::int64_t>(m.cols(), 0));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) table[i][j] = m.formal_degree(i, j);
  }
  return table;
}

namespace {

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  const RingPtr& ring = f.ring() ? f.ring() : g.ring();
  const GradedRing& R = *ring;
  Polynomial q(ring);
  Polynomial h = f;
  while (!h.is_zero()) {
    if (!R.divides(g.leading_monomial(), h.leading_monomial())) {
      fail(errc::invalid_parameter, "division is not exact");
    }
    const mpq_class c = h.leading_coefficient() / g.leading_coefficient();
    const Monomial m = R.div(h.leading_monomial(), g.leading_monomial());
    q = q + Polynomial::monomial(ring, c, m);
    h = h - g.times_term(c, m);
  }
  return q;
}

// Fraction-free elimination; returns (rank, determinant-if-square).
std::pair<int, Polynomial> bareiss(const RingPtr& ring,
                                   std::vector<std::vector<Polynomial>> grid) {
  const int rows = static_cast<int>(grid.size());
  const int cols = rows ? static_cast<int>(grid[0].size()) : 0;
  Polynomial prev = Polynomial::constant(ring, 1);
  int sign = 1;
  int r = 0;
  while (r < rows && r < cols) {
    int pi = -1, pj = -1;
    for (int i = r; i < rows && pi < 0; ++i) {
      for (int j = r; j < cols; ++j) {
        if (!grid[i][j].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;
    if (pi != r) {
      std::swap(grid[pi], grid[r]);
      sign = -sign;
    }
    if (pj != r) {
      for (int i = 0; i < rows; ++i) std::swap(grid[i][pj], grid[i][r]);
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = r + 1; j < cols; ++j) {
        Polynomial num = grid[i][j] * grid[r][r] - grid[i][r] * grid[r][j];
        grid[i][j] = num.is_zero() ? Polynomial(ring) : exact_divide(num, prev);
      }
      grid[i][r] = Polynomial(ring);
    }
    prev = grid[r][r];
    ++r;
  }
  Polynomial det(ring);
  if (rows == cols) {
    if (r == rows) {
      det = sign < 0 ? -prev : prev;
    }
    // rank-deficient square matrix: determinant stays zero
  }
  return {r, det};
}

}  // namespace

int rank_of_matrix(const GradedMatrix& m) {
  std::vector<std::vector<Polynomial>> grid(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) grid[i].push_back(m.entry(i, j));
  }
  return bareiss(m.ring(), std::move(grid)).first;
}

Polynomial matrix_determinant(const RingPtr& ring,
                              const std::vector<std::vector<Polynomial>>& grid) {
  if (grid.empty()) return Polynomial::constant(ring, 1);
  for (const auto& row : grid) {
    if (row.size() != grid.size()) fail(errc::invalid_parameter, "determinant needs a square grid");
  }
  return bareiss(ring, grid).second;
}

namespace {

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    fn(idx);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

Ideal minors_ideal(const GradedMatrix& m, int r) {
  const RingPtr& ring = m.ring();
  if (r <= 0) {
    return Ideal(ring, {Polynomial::constant(ring, 1)});
  }
  std::vector<Polynomial> minors;
  combinations(m.rows(), r, [&](const std::vector<int>& rows) {
    combinations(m.cols(), r, [&](const std::vector<int>& cols) {
      std::vector<std::vector<Polynomial>> grid(r, std::vector<Polynomial>(r));
      for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) grid[a][b] = m.entry(rows[a], cols[b]);
      }
      Polynomial d = matrix_determinant(ring, grid);
      if (!d.is_zero()) minors.push_back(std::move(d));
    });
  });
  return Ideal(ring, std::move(minors));
}

GradedMatrix syzygies(const std::vector<Polynomial>& basis) {
  if (basis.empty()) fail(errc::invalid_parameter, "syzygies of an empty basis");
  const RingPtr& ring = basis.front().ring();
  for (const auto& g : basis) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) fail(errc::invalid_parameter, "syzygies of a zero element");
  }
  ModuleGB level;
  level.ring = ring;
  level.order = ModuleOrder::base(ring);
  level.target_shifts = {0};
  for (const auto& g : basis) {
    ModPoly e;
    for (const auto& t : g.terms()) e.terms.push_back({t.coeff, t.mono, 0});
    level.elements.push_back(std::move(e));
  }
  std::vector<ModPoly> syz = schreyer_syzygies(level);

  GradedFreeModule target;
  for (const auto& g : basis) {
    const auto d = g.homogeneous_degree();
    if (!d) fail(errc::invalid_parameter, "syzygies need homogeneous input");
    target.shifts.push_back(*d);
  }
  GradedFreeModule source;
  std::vector<std::vector<Polynomial>> grid(
      basis.size(), std::vector<Polynomial>(syz.size(), Polynomial(ring)));
  for (std::size_t j = 0; j < syz.size(); ++j) {
    std::vector<std::vector<Term>> per_row(basis.size());
    std::int64_t degree = 0;
    for (const auto& t : syz[j].terms) {
      per_row[t.pos].push_back({t.coeff, t.mono});
      degree = t.mono.degree + target.shifts[t.pos];
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      grid[i][j] = Polynomial::from_terms(ring, std::move(per_row[i]));
    }
    source.shifts.push_back(degree);
  }
  return GradedMatrix(ring, std::move(target), std::move(source), std::move(grid));
}

ExactnessEvidence be_exactness(const std::vector<GradedMatrix>& complex) {
  if (complex.empty()) fail(errc::invalid_parameter, "empty complex");
  const RingPtr& ring = complex.front().ring();
  for (std::size_t k = 0; k + 1 < complex.size(); ++k) {
    require_same_ring(ring, complex[k + 1].ring());
    if (complex[k].source().shifts != complex[k + 1].target().shifts) {
      fail(errc::not_a_complex, "adjacent modules do not match");
    }
    if (!matrix_product(complex[k], complex[k + 1]).is_zero()) {
      fail(errc::not_a_complex, "composition of consecutive maps is nonzero");
    }
  }

  const int n = static_cast<int>(complex.size());
  std::vector<int> rank(n + 2, 0);
  for (int k = 1; k <= n; ++k) rank[k] = rank_of_matrix(complex[k - 1]);

  ExactnessEvidence evidence;
  evidence.exact = true;
  for (int k = 1; k <= n; ++k) {
    ExactnessStep step;
    step.index = k;
    step.rank = rank[k];
    step.source_rank = complex[k - 1].cols();
    step.additivity = step.source_rank == rank[k] + rank[k + 1];
    if (rank[k] > 0) {
      step.minors_codim = codimension(minors_ideal(complex[k - 1], rank[k]));
      step.codim_ok = *step.minors_codim >= k;
    } else {
      step.codim_ok = true;
    }
    if (!step.additivity || !step.codim_ok) evidence.exact = false;
    evidence.steps.push_back(std::move(step));
  }
  return evidence;
}

MinorIdentityResult be_minor_identity(const GradedMatrix& phi1, const GradedMatrix& phi2,
                                      const GradedMatrix& phi3) {
  const int n = phi2.rows();
  if (phi1.rows() != 1 || phi1.cols() != n || phi2.cols() != n || phi3.rows() != n ||
      phi3.cols() != 1) {
    fail(errc::rank_mismatch, "expected maps of shapes 1xn, nxn, nx1");
  }
  if (rank_of_matrix(phi1) != 1 || rank_of_matrix(phi2) != n - 1 ||
      rank_of_matrix(phi3) != 1) {
    fail(errc::rank_mismatch, "ranks must be 1, n-1, 1");
  }
  const RingPtr& ring = phi1.ring();

  MinorIdentityResult result;
  bool have_unit = false;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      Polynomial a = phi1.entry(0, s) * phi3.entry(t, 0);
      std::vector<std::vector<Polynomial>> grid;
      for (int i = 0; i < n; ++i) {
        if (i == s) continue;
        std::vector<Polynomial> row;
        for (int j = 0; j < n; ++j) {
          if (j == t) continue;
          row.push_back(phi2.entry(i, j));
        }
        grid.push_back(std::move(row));
      }
      Polynomial b = matrix_determinant(ring, grid);
      if ((s + t) % 2 == 1) b = -b;
      ++result.pairs_checked;

      if (b.is_zero()) {
        if (!a.is_zero()) {
          result.failure = "outer product nonzero where the inner minor vanishes";
          return result;
        }
        continue;
      }
      if (a.is_zero()) {
        result.failure = "inner minor nonzero where the outer product vanishes";
        return result;
      }
      const mpq_class candidate = a.leading_coefficient() / b.leading_coefficient();
      if (a != b.times(candidate)) {
        result.failure = "subdeterminants are not proportional";
        return result;
      }
      if (!have_unit) {
        result.unit = candidate;
        have_unit = true;
      } else if (candidate != result.unit) {
        result.failure = "unit differs between index pairs";
        return result;
      }
    }
  }
  result.holds = have_unit;
  if (!have_unit) result.failure = "all compared minors vanish";
  return result;
}

std::string render_block_layout(const FreeResolution& resolution) {
  if (resolution.matrices.empty()) return "<zero ideal>\n";
  const GradedMatrix& phi1 = resolution.matrices[0];
  std::vector<std::vector<std::string>> cells;
  const int gens = phi1.cols();
  const bool have2 = resolution.length() >= 2;
  const bool have3 = resolution.length() >= 3;
  const int mid_cols = have2 ? resolution.matrices[1].cols() : 0;
  for (int i = 0; i < gens; ++i) {
    std::vector<std::string> row;
    row.push_back(phi1.entry(0, i).to_string());
    for (int j = 0; j < mid_cols; ++j) {
      row.push_back(resolution.matrices[1].entry(i, j).to_string());
    }
    cells.push_back(std::move(row));
  }
  if (have3) {
    const GradedMatrix& phi3 = resolution.matrices[2];
    for (int c = 0; c < phi3.cols(); ++c) {
      std::vector<std::string> row;
      row.push_back("");
      for (int r = 0; r < phi3.rows(); ++r) row.push_back(phi3.entry(r, c).to_string());
      cells.push_back(std::move(row));
    }
  }
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (r == static_cast<std::size_t>(gens)) {
      out << std::string(4, '-') << "\n";
    }
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      out << (c == 0 ? "" : "  ") << cells[r][c]
          << std::string(widths[c] - cells[r][c].size(), ' ');
      if (c == 0) out << " |";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace nws
