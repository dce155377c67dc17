#include <climits>
#include <stdexcept>

#include "gcp/fock.hpp"
#include "gcp/matrix.hpp"

namespace gcp {

namespace {

// B_{i}/A_{j} as a quotient alphabet (j or i may be zero or negative: empty).
Alpha beta_over_alpha(int i, int j) {
    return beta_n(std::max(i, 0)).unite(alpha_n(std::max(j, 0)).negate());
}

std::vector<std::pair<int, Poly>> dressed_mode(int base, const Alpha& a,
                                               bool ascending, int cutoff) {
    // sum_k h_k(a) psi_{base +- k}; h_k is homogeneous of graded degree k, so
    // k beyond the cutoff cannot survive truncation.
    std::vector<std::pair<int, Poly>> out;
    for (int k = 0; k <= cutoff; ++k) {
        Poly c = hsym(a, k);
        if (c.is_zero()) continue;
        out.emplace_back(ascending ? base + k : base - k, c);
    }
    return out;
}

Poly beta_tail_ps(int rows, int k) {
    // power sum of B_rows, negated: weights of the raising exponential
    // applied after all modes are in place
    Poly p = power_sum(beta_n(rows), k);
    return -p;
}

// A_{la_i} together with B_{[i, rows]}: coefficients of the upward-dressed
// mode used by upper_ket and, starred, by the dual pairing.
Alpha upper_alphabet(const Partition& la, int i, int rows) {
    return alpha_n(la.part(i)).unite(beta_interval(i, rows, true, true));
}

// Whether the discarded tail k > cutoff of sum_k h_k(a) psi_{base +- k}
// (psi* when `star`) could act nontrivially on some component of v. A
// pure-minus alphabet has h_k = 0 beyond its size; any alphabet with a plus
// part has h_k != 0 for every k.
bool dressing_tail_alive(const FockVector& v, int base, const Alpha& a,
                         bool ascending, bool star, int cutoff) {
    const long kmax =
        a.plus.empty() ? static_cast<long>(a.minus.size()) : LONG_MAX;
    if (kmax <= cutoff) return false;
    for (auto& [key, amp] : v.amps) {
        for (long k = cutoff + 1; k <= kmax; ++k) {
            int mode = ascending ? base + static_cast<int>(k)
                                 : base - static_cast<int>(k);
            if (!ascending && mode < v.lo) {
                // the sea: psi* still annihilates there, psi never lands
                if (star) return true;
                break;
            }
            if (ascending && mode >= v.hi) {
                // above the window: free space for psi, vacuum for psi*
                if (!star) return true;
                break;
            }
            bool occ = v.occupied(key, mode);
            if (star ? occ : !occ) return true;
        }
    }
    return false;
}

}  // namespace

Window default_window(int max_part, int rows, int cutoff) {
    return {-(rows + max_part + cutoff + 2), max_part + cutoff + 2};
}

FockVector lower_ket(const Partition& la, int rows, Window w, int cutoff,
                     uint32_t mask) {
    if (la.length() > rows)
        throw std::invalid_argument("lower_ket needs rows >= number of parts");
    FockVector v = vacuum_state(-rows, w.lo, w.hi, cutoff, mask);
    for (int i = rows; i >= 1; --i) {
        Alpha a = beta_over_alpha(i - 1, la.part(i) - 1);
        int base = la.part(i) - i;
        bool lost = dressing_tail_alive(v, base, a, false, false, cutoff);
        v = apply_psi_sum(v, dressed_mode(base, a, false, cutoff));
        if (lost) v.exact = false;
    }
    return v;
}

FockVector upper_ket(const Partition& la, int rows, Window w, int cutoff,
                     uint32_t mask) {
    if (la.length() >= rows)
        throw std::invalid_argument("upper_ket needs a trailing empty row");
    FockVector v = vacuum_state(-rows, w.lo, w.hi, cutoff, mask);
    for (int i = rows; i >= 1; --i) {
        Alpha a = upper_alphabet(la, i, rows);
        int base = la.part(i) - i;
        bool lost = dressing_tail_alive(v, base, a, true, false, cutoff);
        v = apply_psi_sum(v, dressed_mode(base, a, true, cutoff));
        if (lost) v.exact = false;
    }
    return exp_currents(
        v, [rows](int k) { return beta_tail_ps(rows, k); }, true);
}

FockVector dbl_bracket_star(const Partition& mu, int rows, Window w, int cutoff,
                            uint32_t mask) {
    if (mu.length() > rows)
        throw std::invalid_argument("dbl_bracket_star needs rows >= number of parts");
    FockVector v = vacuum_state(-rows, w.lo, w.hi, cutoff, mask);
    for (int i = rows; i >= 1; --i) {
        Alpha a = beta_over_alpha(i, mu.part(i));
        int base = mu.part(i) - i;
        bool lost = dressing_tail_alive(v, base, a, false, false, cutoff);
        v = apply_psi_sum(v, dressed_mode(base, a, false, cutoff));
        if (lost) v.exact = false;
    }
    return v;
}

Series fock_matrix_element(GKind kind, const Partition& la, const Partition& mu,
                           int nvars, int cutoff) {
    const int rows = std::max(la.length(), mu.length()) + 1;
    const int top = std::max(la.part(1), mu.part(1));
    Window w = default_window(top, rows, cutoff);
    if (kind == GKind::Dual) {
        // Pair through the annihilation side: star the mu vector onto the
        // evolved ket so every infinite dressing tail meets an empty mode and
        // dies, leaving an honestly exact polynomial when nothing was cut.
        FockVector u = lower_ket(la, rows, w, cutoff);
        u = apply_exp_hx(u, nvars);
        u = exp_currents(
            u, [rows](int k) { return beta_tail_ps(rows, k); }, false);
        for (int i = 1; i <= rows; ++i) {
            Alpha a = upper_alphabet(mu, i, rows);
            int base = mu.part(i) - i;
            bool lost = dressing_tail_alive(u, base, a, true, true, cutoff);
            u = apply_psi_sum(u, dressed_mode(base, a, true, cutoff), true);
            if (lost) u.exact = false;
        }
        return dot(vacuum_state(-rows, w.lo, w.hi, cutoff), u);
    }
    FockVector bra = (kind == GKind::Slash)
                         ? dbl_bracket_star(mu, rows, w, cutoff)
                         : lower_ket(mu, rows, w, cutoff);
    FockVector ket = upper_ket(la, rows, w, cutoff);
    return dot(bra, apply_exp_hx(ket, nvars));
}

namespace {

using ModeSeries = std::map<int, Series>;

ModeSeries mode_series(const std::vector<std::pair<int, Poly>>& coeffs,
                       int cutoff, uint32_t mask) {
    ModeSeries out;
    for (auto& [t, c] : coeffs) {
        Series s(c, cutoff, mask);
        if (s.is_zero()) continue;
        auto [it, fresh] = out.emplace(t, s);
        if (!fresh) it->second += s;
    }
    return out;
}

// sum_k (-1)^k e_k(a) at mode base - k (always a finite list).
std::vector<std::pair<int, Poly>> e_alternating(int base, const Alpha& a) {
    std::vector<std::pair<int, Poly>> out;
    for (int k = 0;; ++k) {
        Poly c = esym(a, k);
        if (c.is_zero() && k > 0) break;
        if (k % 2) c = -c;
        if (!c.is_zero()) out.emplace_back(base - k, c);
    }
    return out;
}

}  // namespace

Series wick_matrix_element(GKind kind, const Partition& la, const Partition& mu,
                           int nvars, int cutoff) {
    const int rows = std::max(la.length(), mu.length()) + 1;
    const uint32_t mask = kMaskParams;
    const int floor_mode = -rows;

    // conservatively: the result is only certified complete when no dressed
    // mode had an h tail beyond the cutoff
    bool complete = true;
    auto h_dressing = [&](int base, const Alpha& a, bool ascending) {
        if (!a.plus.empty() || static_cast<int>(a.minus.size()) > cutoff)
            complete = false;
        return mode_series(dressed_mode(base, a, ascending, cutoff), cutoff, mask);
    };

    // annihilating modes (columns) and creating modes (rows)
    std::vector<ModeSeries> Q(rows), P(rows);
    for (int j = 1; j <= rows; ++j) {
        int base = mu.part(j) - j;
        if (kind == GKind::Slash) {
            Alpha a = alpha_n(mu.part(j)).unite(beta_interval(j, rows, false, true));
            Q[j - 1] = mode_series(e_alternating(base, a), cutoff, mask);
        } else if (kind == GKind::Dslash) {
            Alpha a = alpha_n(mu.part(j) - 1).unite(beta_interval(j, rows, true, true));
            Q[j - 1] = mode_series(e_alternating(base, a), cutoff, mask);
        } else {
            // h_m(A_{mu_j} / B_{j-1}) at psi*_{mu_j - j + m}
            Alpha a = alpha_n(mu.part(j)).unite(beta_n(j - 1).negate());
            Q[j - 1] = h_dressing(base, a, true);
        }
    }
    for (int i = 1; i <= rows; ++i) {
        int base = la.part(i) - i;
        if (kind == GKind::Dual) {
            // h_k(B_{i-1} / A_{la_i - 1}) at psi_{la_i - i - k}
            Alpha a = beta_over_alpha(i - 1, la.part(i) - 1);
            P[i - 1] = h_dressing(base, a, false);
        } else {
            Alpha a = upper_alphabet(la, i, rows);
            P[i - 1] = h_dressing(base, a, true);
        }
    }

    // dress the creating modes with the x evolution: psi_u -> sum_b h_b(x) psi_{u-b}
    Alpha xs = x_alphabet(nvars);
    std::vector<ModeSeries> Pd(rows);
    for (int i = 0; i < rows; ++i) {
        int topmode = P[i].empty() ? floor_mode : P[i].rbegin()->first;
        for (int t = floor_mode; t <= topmode; ++t) {
            Series acc = Series::zero(cutoff, mask);
            for (auto& [u, s] : P[i]) {
                if (u < t) continue;
                acc += s.times_poly(hsym(xs, u - t));
            }
            if (!acc.is_zero()) Pd[i].emplace(t, acc);
        }
    }

    std::vector<std::vector<Series>> m(rows, std::vector<Series>(rows, Series::zero(cutoff, mask)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) {
            Series acc = Series::zero(cutoff, mask);
            for (auto& [t, q] : Q[j]) {
                if (t < floor_mode) continue;
                auto it = Pd[i].find(t);
                if (it != Pd[i].end()) acc += q * it->second;
            }
            m[i][j] = acc;
        }

    Series det = series_det(m, cutoff, mask);
    det.exact = det.exact && complete;
    if (kind == GKind::Dual) return det;
    Poly cm{Int(1)};
    for (int j = 1; j <= rows; ++j)
        for (int k = 1; k <= nvars; ++k)
            cm *= Poly(Int(1)) - Poly::variable(Fam::beta, j) * Poly::variable(Fam::x, k);
    return det.times_poly(cm);
}

Series flagged_wick_series(const Partition& la, const Partition& mu,
                           const std::vector<int>& s, int cutoff) {
    const int rows = static_cast<int>(s.size());
    if (rows < la.length() || rows < mu.length())
        throw std::invalid_argument("flags must cover every row of the shapes");
    const uint32_t mask = kMaskParams;
    const int floor_mode = -rows;

    std::vector<ModeSeries> Q(rows), P(rows);
    for (int j = 1; j <= rows; ++j) {
        Alpha a = alpha_n(mu.part(j)).unite(beta_interval(j, rows, false, true));
        Q[j - 1] = mode_series(e_alternating(mu.part(j) - j, a), cutoff, mask);
    }
    for (int i = 1; i <= rows; ++i) {
        Alpha a = upper_alphabet(la, i, rows);
        P[i - 1] = mode_series(dressed_mode(la.part(i) - i, a, true, cutoff),
                               cutoff, mask);
    }

    // same dressing as above, but row i only sees x_1..x_{s_i}
    std::vector<ModeSeries> Pd(rows);
    for (int i = 0; i < rows; ++i) {
        Alpha xs = var_range(Fam::x, 1, s[i]);
        int topmode = P[i].empty() ? floor_mode : P[i].rbegin()->first;
        for (int t = floor_mode; t <= topmode; ++t) {
            Series acc = Series::zero(cutoff, mask);
            for (auto& [u, su] : P[i]) {
                if (u < t) continue;
                acc += su.times_poly(hsym(xs, u - t));
            }
            if (!acc.is_zero()) Pd[i].emplace(t, acc);
        }
    }

    std::vector<std::vector<Series>> m(rows, std::vector<Series>(rows, Series::zero(cutoff, mask)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) {
            Series acc = Series::zero(cutoff, mask);
            for (auto& [t, q] : Q[j]) {
                if (t < floor_mode) continue;
                auto it = Pd[i].find(t);
                if (it != Pd[i].end()) acc += q * it->second;
            }
            m[i][j] = acc;
        }

    Series det = series_det(m, cutoff, mask);
    if (rows > 0) det.exact = false;  // every dressed mode has a cut tail
    Poly pref{Int(1)};
    for (int i = 1; i <= rows; ++i)
        for (int k = 1; k <= s[i - 1]; ++k)
            pref *= Poly(Int(1)) - Poly::variable(Fam::beta, i) * Poly::variable(Fam::x, k);
    return det.times_poly(pref);
}

}  // namespace gcp
