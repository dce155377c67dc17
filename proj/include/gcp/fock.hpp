#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "gcp/alphabets.hpp"
#include "gcp/grothendieck.hpp"
#include "gcp/partition.hpp"
#include "gcp/poly.hpp"
#include "gcp/series.hpp"

namespace gcp {

// ---------------------------------------------------------------------------
// States.
//
// A basis state is a half-infinite wedge described inside a finite mode
// window [lo, hi): every mode below lo is occupied (the filled sea), every
// mode at or above hi is empty, and the window itself is a bitset (bit
// m - lo <=> mode m occupied). Vectors are finite combinations of such
// states with coefficients in the truncation ring.
//
// Operator conventions used throughout:
//   psi_k      adds a particle at mode k, sign (-1)^{#occupied above k};
//              k < lo hits the sea (result 0), k >= hi overflows (error).
//   psi*_k     removes the particle at mode k, same sign; k >= hi gives 0,
//              k < lo would dig a hole in the sea (error).
//   a_m (m>0)  moves each particle down by m (sum over particles, sign =
//              parity of occupied modes strictly between source and target).
//   a_-m       moves particles up by m; requires [lo, lo+m) fully occupied
//              so that no sea particle can surface (error otherwise), and
//              errors if a particle would cross hi.
//   a_0        multiplies each state by its charge.
// ---------------------------------------------------------------------------

// Exactness: amplitudes whose bodies truncated to zero but which recorded a
// drop are kept as zero "poison" entries, so that later operators can either
// kill them honestly (a blocked move) or carry the loss to the final pairing.
// The vector-level `exact` flag collects losses that cannot be attached to a
// single surviving entry (a truncated dressing tail, a poison amplitude
// pushed over the window edge).
struct FockVector {
    int lo = 0;
    int hi = 0;  // window is [lo, hi)
    int cutoff = 0;
    uint32_t mask = kMaskParams;
    bool exact = true;
    std::map<uint64_t, Series> amps;

    bool is_zero() const {
        for (auto& [k, s] : amps)
            if (!s.is_zero()) return false;
        return true;
    }
    void add(uint64_t key, const Series& s);
    Series& at(uint64_t key);
    bool occupied(uint64_t key, int mode) const {
        return mode < lo || (mode < hi && (key >> (mode - lo) & 1));
    }
    int charge_of(uint64_t key) const;
};

// The state |c> with modes c-1, c-2, ... occupied.
FockVector vacuum_state(int charge, int lo, int hi, int cutoff,
                        uint32_t mask = kMaskParams);

// Basis state at charge `c` whose occupied modes are {lambda_i - i + c}.
FockVector basis_state(const Partition& la, int charge, int lo, int hi,
                       int cutoff, uint32_t mask = kMaskParams);

FockVector apply_psi(const FockVector& v, int k);
FockVector apply_psi_star(const FockVector& v, int k);
FockVector apply_current(const FockVector& v, int m);

// sum_t coeff_t psi_t (or psi*_t) applied to v.
FockVector apply_psi_sum(const FockVector& v,
                         const std::vector<std::pair<int, Poly>>& coeffs,
                         bool star = false);

// exp(sum_{k>=1} p(k) a_{+-k} / k) v by weight-graded recursion with exact
// factorial bookkeeping. Lowering (raising = false) terminates on its own;
// raising relies on p(k) carrying graded degree k so the series leaves the
// truncation ring after `cutoff` steps. Throws if the recursion fails to
// terminate or an exact division fails.
FockVector exp_currents(const FockVector& v, const std::function<Poly(int)>& pk,
                        bool raising);

// e^{H(x_1..x_n)} v: one lowering pass per variable (p(k) = x_j^k), exact.
FockVector apply_exp_hx(const FockVector& v, int nvars);

// Bilinear pairing sum_S w_S v_S (bras are stored as plain vectors).
Series dot(const FockVector& w, const FockVector& v);

// ---------------------------------------------------------------------------
// Canonical vectors. All live at charge 0 and are built on |-l> by l dressed
// fermion modes; l must be at least the number of parts (strictly more for
// upper_ket). The default window below absorbs every shift these builders
// and the x evolution can produce.
// ---------------------------------------------------------------------------

struct Window {
    int lo;
    int hi;
};
Window default_window(int max_part, int rows, int cutoff);

FockVector lower_ket(const Partition& la, int rows, Window w, int cutoff,
                     uint32_t mask = kMaskParams);
FockVector upper_ket(const Partition& la, int rows, Window w, int cutoff,
                     uint32_t mask = kMaskParams);
// Star of the double-bracket bra, stored as a ket for the plain pairing.
FockVector dbl_bracket_star(const Partition& mu, int rows, Window w, int cutoff,
                            uint32_t mask = kMaskParams);

// ---------------------------------------------------------------------------
// Matrix elements. Both routes compute the same three families:
//   Slash   <mu(double bracket)| e^{H(x)} |la(upper)>
//   Dslash  <mu(lower)| e^{H(x)} |la(upper)>   (quotient variant)
//   Dual    <mu(upper)| e^{H(x)} |la(lower)>
// The first evolves states directly; the second expands a product of dressed
// fermion modes with the two-point function (a determinant).
// ---------------------------------------------------------------------------

Series fock_matrix_element(GKind kind, const Partition& la, const Partition& mu,
                           int nvars, int cutoff);

Series wick_matrix_element(GKind kind, const Partition& la, const Partition& mu,
                           int nvars, int cutoff);

// Row-flagged G_{la/mu} with unit lower flags: the dressed-mode sandwich in
// which row i of the shape sees only x_1..x_{s_i}, evaluated by pairing the
// modes against each other (a determinant again).
Series flagged_wick_series(const Partition& la, const Partition& mu,
                           const std::vector<int>& s, int cutoff);

}  // namespace gcp
