#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gcp/partition.hpp"
#include "gcp/poly.hpp"

namespace gcp {

// ---------------------------------------------------------------------------
// Expansion-coefficient determinants. Each kind is a determinant in complete
// homogeneous (h) or elementary (e) symmetric functions of small difference
// alphabets built from the parameter families; `top` is the superscript
// shape and `low` the subscript shape of the coefficient. With t = top,
// w = low and 1-based matrix indices the entries are
//
//   I       h_{t_i - w_j - i + j} (A_{w_j} / B_{j-1})
//   Itilde  e_{t_i - w_j - i + j} (A_{j-1} / B_{w_j})
//   E       h_{w_i - t_j - i + j} (B_{i-1} / A_{w_i - 1})
//   Etilde  e_{w_i - t_j - i + j} (B_{w_i - 1} / A_{i-1})
//   D       h_{t_i - w_j - i + j} (B_i / A_{t_i})
//   Dtilde  e_{t_i - w_j - i + j} (B_{t_i} / A_i)
//   b       h_{w_i - t_j - i + j} (B_{[j,i)} / A_{w_i - 1})
//   B       h_{-w_i + t_j + i - j} (A_{w_i} / B_{[j,i)})
//
// where A_n = {-a_1..-a_n}, B_n = {b_1..b_n}, B_{[j,i)} = {b_j..b_{i-1}}
// (reversed intervals per interval_atoms). Uses: I and E expand the raised
// and lowered dressed states over plain Schur functions, D pairs the dressed
// bra against them, and the tilded kinds are the conjugate-shape analogues.
// b and B connect the two-parameter families to their one-parameter (a = 0)
// specializations: finite on the dual side (b, supported on top inside low)
// and infinite on the quotient side (B, supported on top containing low).
// ---------------------------------------------------------------------------
enum class CoeffKind { I, Itilde, E, Etilde, D, Dtilde, b, B };

// The determinant, exact. `pad` enlarges the matrix beyond the minimal size
// max(len(top), len(low)); the value must not change.
Poly coeff_matrix(CoeffKind kind, const Partition& top, const Partition& low,
                  int pad = 0);

// The same value for kinds b and B computed from the transposed shapes: an
// h-determinant of size max(top_1, low_1) + pad over column alphabets, times
// the sign (-1)^{|top| - |low|}. Throws std::invalid_argument for other
// kinds.
Poly coeff_matrix_conj(CoeffKind kind, const Partition& top,
                       const Partition& low, int pad = 0);

// coeff_matrix with every a_k replaced by `a` and every b_k by `b` in the
// entries before the determinant is expanded. On 5x5 shapes the generic
// determinant drags dozens of live variables; specializing first keeps the
// entries two-variable and the expansion instant.
Poly coeff_matrix_collapsed(CoeffKind kind, const Partition& top,
                            const Partition& low, const Poly& a,
                            const Poly& b);

// Pairing of the raised family against the lowered one:
// det[ h_{la_i - mu_j - i + j}((A_{mu_j} u B_{i-1}) / (A_{la_i-1} u B_{j-1})) ].
// Equals 1 when la == mu and 0 otherwise.
Poly dual_pairing(const Partition& la, const Partition& mu, int pad = 0);

// ---------------------------------------------------------------------------
// Corner decompositions. Removing a cell at (row, col) weighs a_col + b_row.
// Forward: over subsets of the removable corners of mu, each deleted cell
// contributing -(a_col + b_row); converts plain skew functions into quotient
// ones. Inverse: over all shapes nu inside mu, weighing every cell of mu/nu
// by +(a_col + b_row); undoes the forward map.
// ---------------------------------------------------------------------------
std::vector<std::pair<Partition, Poly>> corner_expand(const Partition& mu,
                                                      bool forward);

// ---------------------------------------------------------------------------
// Schur expansions of symmetric polynomials in x_1..x_n. Coefficients carry
// the parameter families only. Conjugating the index shapes is meaningful
// only while every term has total degree <= faithful_degree (the n-variable
// truncation is faithful on that window).
// ---------------------------------------------------------------------------
struct SchurExpansion {
    int nvars = 0;
    int faithful_degree = 0;
    std::map<Partition, Poly> terms;
};

// Expand by leading-monomial peeling: repeatedly take the graded-lex-leading
// x-monomial, whose exponent vector must be a partition la, and subtract
// coeff * s_la(x_1..x_n). Throws std::invalid_argument if p is not symmetric
// under adjacent x-swaps, mentions x_k with k > nvars, or a leading exponent
// fails to be a partition.
SchurExpansion schur_expand(const Poly& p, int nvars);

// Rebuild sum_la coeff_la * s_la(x_1..x_n).
Poly schur_assemble(const SchurExpansion& se);

// Transpose every index shape, keeping coefficients. Throws
// std::domain_error if any term lies outside the faithful window. The
// classical involution on the refined families is this composed with an
// a <-> b swap on the coefficients.
SchurExpansion omega(const SchurExpansion& se);

// ---------------------------------------------------------------------------
// One-parameter decompositions: write the two-parameter function on shape la
// as a combination of a = 0 functions. The dual side is finite,
//   g_la(x; a, b) = sum_{mu inside la} b^mu_la g_mu(x; b),
// the quotient side is an infinite sum truncated to |mu| <= |la| + extra,
//   G_la(x; a, b) = sum_{mu containing la} B^mu_la G_mu(x; b).
// Zero coefficients are dropped.
// ---------------------------------------------------------------------------
std::map<Partition, Poly> decompose_one_param(const Partition& la, bool g_side,
                                              int extra = 0);

}  // namespace gcp
