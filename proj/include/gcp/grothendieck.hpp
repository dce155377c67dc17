#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gcp/partition.hpp"
#include "gcp/poly.hpp"
#include "gcp/series.hpp"

namespace gcp {

// The three families computed here: the series G_{la/mu} (Slash), its
// double-slash companion G_{la//mu} (Dslash), and the dual polynomials
// g_{la/mu} (Dual).
enum class GKind { Slash, Dslash, Dual };

// Which Jacobi-Trudi determinant to evaluate: complete homogeneous functions
// indexed by the rows of the shape, or elementary ones indexed by the columns
// of the conjugate shape. Both give the same value.
enum class DetForm { H, E };

// G_{la/mu}, G_{la//mu} or g_{la/mu} in x_1..x_n by the Jacobi-Trudi
// determinant, truncated past graded parameter degree `cutoff`. `pad` adds
// that many extra rows (H form) or columns (E form) beyond the minimal
// determinant size; the value is unchanged. Dual results are wrapped exact
// polynomials.
Series jt_series(GKind kind, const Partition& la, const Partition& mu,
                 int nvars, int cutoff, DetForm form = DetForm::H, int pad = 0);

// The dual family is a polynomial; this evaluates its determinant exactly,
// with no truncation anywhere.
Poly jt_dual(const Partition& la, const Partition& mu, int nvars,
             DetForm form = DetForm::H, int pad = 0);

// Runs a truncated evaluation at `cutoff` and again with a margin of two,
// accepting the value only when both agree up to `cutoff`. On disagreement
// the cutoff is doubled, up to `max_cutoff`; persistent disagreement raises
// std::runtime_error. The accepted series is truncated back to `cutoff`.
Series stabilized(const std::function<Series(int)>& eval, int cutoff,
                  int max_cutoff = 256);

// jt_series guarded by the stabilized retry policy.
Series jt_stable(GKind kind, const Partition& la, const Partition& mu,
                 int nvars, int cutoff, DetForm form = DetForm::H, int pad = 0,
                 int max_cutoff = 256);

// Skew Schur polynomial s_{la/mu}(x_1..x_n).
Poly schur_skew(const Partition& la, const Partition& mu, int nvars);

// Single-row series in x_{xlo}..x_{xhi} with one extra parameter b: the
// coefficient of z^m in
//     1/(1 - b z^{-1}) * prod_{k=xlo}^{xhi} (1 - b x_k) / (1 - x_k z).
// Equals b^{-m} for m <= 0 and prod_k (1 - b x_k) sum_{a>=0} b^a h_{m+a}(x)
// for m >= 1.
Series single_row_series(int m, const Poly& b, int xlo, int xhi, int cutoff,
                         std::uint32_t mask = kMaskParams);

// G_{la/mu} or G_{la//mu} as a determinant of single-row series (no outer
// prefactor). The matrix always carries at least one trailing empty row.
Series single_row_det(GKind kind, const Partition& la, const Partition& mu,
                      int nvars, int cutoff, int pad = 0);

// The same three families with every entry read off as a coefficient of a
// rational generating function in an auxiliary variable. `side` selects the
// row (H) or conjugate-column (E) version.
Series integral_series(GKind kind, const Partition& la, const Partition& mu,
                       int nvars, int cutoff, DetForm side = DetForm::H,
                       int pad = 0);

// Row-flagged G_{la/mu}: row i of the shape ranges over x_{r_i}..x_{s_i}.
// Flags must be admissible: r and s weakly increase across every pair of
// consecutive rows that interact (mu_i < la_{i+1}).
bool flags_admissible(const Partition& la, const Partition& mu,
                      const std::vector<int>& r, const std::vector<int>& s);
Series flagged_row_series(const Partition& la, const Partition& mu,
                          const std::vector<int>& r, const std::vector<int>& s,
                          int cutoff);
// Same value for r = (1,...,1), as a determinant of single-row series.
Series flagged_single_row_det(const Partition& la, const Partition& mu,
                              const std::vector<int>& s, int cutoff);

// prod over the cells of outer/inner of (alpha_col + beta_row), optionally
// negated per cell. The inner shape need not be contained in the outer one;
// only the cells of outer outside inner contribute.
Poly corner_weight(const Partition& outer, const Partition& inner,
                   bool negated);

// G_{la//mu} as the corner-removal sum of weighted G_{la/nu}, and the inverse
// relation expressing G_{la/mu} over all nu inside mu.
Series dslash_from_slash(const Partition& la, const Partition& mu, int nvars,
                         int cutoff);
Series slash_from_dslash(const Partition& la, const Partition& mu, int nvars,
                         int cutoff);

// G_{la/mu} factors through the intersection: weight(mu over la cap mu) times
// G_{la/(la cap mu)}. Meaningful mainly when mu is not contained in la.
Series slash_reduce_inner(const Partition& la, const Partition& mu, int nvars,
                          int cutoff);

}  // namespace gcp
