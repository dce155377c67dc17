#pragma once

#include <cstdint>
#include <vector>

#include "gcp/poly.hpp"
#include "gcp/series.hpp"

namespace gcp {

// A formal alphabet given as an explicit list of "plus" atoms and "minus"
// atoms.  An atom is an arbitrary polynomial (usually a single variable or
// its negative).  The complete homogeneous and elementary symmetric
// functions of such a difference of finite alphabets are polynomials,
// computed from the generating series
//     sum_m h_m(P/M) t^m = prod_{p in P} 1/(1 - p t) * prod_{q in M} (1 - q t).
struct Alpha {
  std::vector<Poly> plus;
  std::vector<Poly> minus;

  Alpha() = default;

  bool empty() const { return plus.empty() && minus.empty(); }

  // Disjoint union of alphabets: atoms are concatenated.
  Alpha unite(const Alpha& o) const;

  // Formal negation: swaps the roles of plus and minus atoms.
  Alpha negate() const;
};

// Atoms -a_lo, ..., -a_hi taken with the interval convention described at
// interval_atoms.  The first family argument of the classical alphabet
// A_n = {-a_1, ..., -a_n}.
Alpha alpha_interval(int lo, int hi, bool lo_closed, bool hi_closed);
Alpha alpha_n(int n);

// Atoms b_lo, ..., b_hi; B_n = {b_1, ..., b_n}.
Alpha beta_interval(int lo, int hi, bool lo_closed, bool hi_closed);
Alpha beta_n(int n);

// Indexed atoms of one variable family over an integer interval.  Both
// endpoints may be marked closed or open; the interval is normalized to the
// half-open form [a, b).  When the normalized interval is reversed (a > b)
// the atoms of [b, a) are returned on the opposite side, so that unions of
// consecutive intervals telescope.  Indices below 1 are clipped away.
// `negate_atoms` multiplies each atom by -1 (used for the first family).
Alpha interval_atoms(Fam fam, int lo, int hi, bool lo_closed, bool hi_closed,
                     bool negate_atoms);

// h_m(P/M) and e_m(P/M) for finite alphabets; zero for m < 0, one for m = 0.
Poly hsym(const Alpha& a, int m);
Poly esym(const Alpha& a, int m);

// Power sum p_k(P/M) = sum_P p^k - sum_M q^k, k >= 1.
Poly power_sum(const Alpha& a, int k);

// The x alphabet x_1..x_n as plus atoms, and a helper for an arbitrary list
// of variables of one family.
Alpha x_alphabet(int n);
Alpha var_range(Fam fam, int lo, int hi);  // closed range lo..hi, clipped at 1

// h_m(X (-) S) = sum_b h_{m+b}(X) h_b(S) truncated in the parameter grading,
// where X = x_1..x_n (or an explicit atom list) and S is a finite alphabet of
// parameter atoms.  The result is exact when S has no plus atoms beyond the
// cutoff's reach; exactness is tracked by the Series.
Series h_ominus(const std::vector<Poly>& x_atoms, const Alpha& s, int m,
                int cutoff, std::uint32_t mask = kMaskParams);
Series e_ominus(const std::vector<Poly>& x_atoms, const Alpha& s, int m,
                int cutoff, std::uint32_t mask = kMaskParams);

// Atom list x_1..x_n.
std::vector<Poly> x_atoms(int n);

}  // namespace gcp
