#include "gcp/alphabets.hpp"

#include <algorithm>
#include <cassert>

namespace gcp {

namespace {

// Coefficients c[0..maxdeg] of prod_plus 1/(1 - p t) * prod_minus (1 - q t).
std::vector<Poly> h_table(const Alpha& a, int maxdeg) {
    std::vector<Poly> c(maxdeg + 1);
    c[0] = Poly(Int(1));
    for (const Poly& p : a.plus)
        for (int k = 1; k <= maxdeg; ++k) c[k] += p * c[k - 1];
    for (const Poly& q : a.minus)
        for (int k = maxdeg; k >= 1; --k) c[k] -= q * c[k - 1];
    return c;
}

// Coefficients of prod_plus (1 + p t) * prod_minus 1/(1 + q t).
std::vector<Poly> e_table(const Alpha& a, int maxdeg) {
    std::vector<Poly> c(maxdeg + 1);
    c[0] = Poly(Int(1));
    for (const Poly& p : a.plus)
        for (int k = maxdeg; k >= 1; --k) c[k] += p * c[k - 1];
    for (const Poly& q : a.minus)
        for (int k = 1; k <= maxdeg; ++k) c[k] -= q * c[k - 1];
    return c;
}

}  // namespace

Alpha Alpha::unite(const Alpha& o) const {
    Alpha r = *this;
    r.plus.insert(r.plus.end(), o.plus.begin(), o.plus.end());
    r.minus.insert(r.minus.end(), o.minus.begin(), o.minus.end());
    return r;
}

Alpha Alpha::negate() const {
    Alpha r;
    r.plus = minus;
    r.minus = plus;
    return r;
}

Alpha interval_atoms(Fam fam, int lo, int hi, bool lo_closed, bool hi_closed,
                     bool negate_atoms) {
    int a = lo + (lo_closed ? 0 : 1);
    int b = hi + (hi_closed ? 1 : 0);
    bool reversed = a > b;
    if (reversed) std::swap(a, b);
    Alpha r;
    std::vector<Poly>& side = reversed ? r.minus : r.plus;
    for (int i = std::max(a, 1); i < b; ++i) {
        Poly v = Poly::variable(fam, i);
        side.push_back(negate_atoms ? -v : v);
    }
    return r;
}

Alpha alpha_interval(int lo, int hi, bool lo_closed, bool hi_closed) {
    return interval_atoms(Fam::alpha, lo, hi, lo_closed, hi_closed, true);
}

Alpha alpha_n(int n) { return alpha_interval(1, n, true, true); }

Alpha beta_interval(int lo, int hi, bool lo_closed, bool hi_closed) {
    return interval_atoms(Fam::beta, lo, hi, lo_closed, hi_closed, false);
}

Alpha beta_n(int n) { return beta_interval(1, n, true, true); }

Poly hsym(const Alpha& a, int m) {
    if (m < 0) return Poly{};
    if (m == 0) return Poly(Int(1));
    return h_table(a, m)[m];
}

Poly esym(const Alpha& a, int m) {
    if (m < 0) return Poly{};
    if (m == 0) return Poly(Int(1));
    return e_table(a, m)[m];
}

Poly power_sum(const Alpha& a, int k) {
    assert(k >= 1);
    Poly r;
    for (const Poly& p : a.plus) r += p.pow(k);
    for (const Poly& q : a.minus) r -= q.pow(k);
    return r;
}

Alpha x_alphabet(int n) {
    Alpha r;
    r.plus = x_atoms(n);
    return r;
}

Alpha var_range(Fam fam, int lo, int hi) {
    Alpha r;
    for (int i = std::max(lo, 1); i <= hi; ++i)
        r.plus.push_back(Poly::variable(fam, i));
    return r;
}

std::vector<Poly> x_atoms(int n) {
    std::vector<Poly> r;
    for (int i = 1; i <= n; ++i) r.push_back(Poly::variable(Fam::x, i));
    return r;
}

Series h_ominus(const std::vector<Poly>& xs, const Alpha& s, int m, int cutoff,
                std::uint32_t mask) {
    // h_m(X (-) S) = sum_{b >= max(0,-m)} h_{m+b}(X) h_b(S).  When S has plus
    // atoms the sum is infinite; terms with b > cutoff all carry graded degree
    // > cutoff (each S atom lies in a graded family), so dropping them is the
    // ring truncation and the result is marked inexact.
    int bmax = s.plus.empty() ? static_cast<int>(s.minus.size())
                              : std::max(cutoff, -m);
    Alpha ax;
    ax.plus = xs;
    std::vector<Poly> hx = h_table(ax, std::max(m + bmax, 0));
    std::vector<Poly> hs = h_table(s, bmax);
    Poly sum;
    bool dropped = false;
    for (int b = std::max(0, -m); b <= bmax; ++b) {
        if (m + b > static_cast<int>(hx.size()) - 1) break;
        sum += hx[m + b].mul_truncated(hs[b], mask, cutoff, &dropped);
    }
    Series r(std::move(sum), cutoff, mask);
    // With plus atoms in S and at least one x the sum truly is infinite; with
    // no x only the single term b = -m survives and the value is finite.
    if ((!s.plus.empty() && !xs.empty()) || dropped) r.exact = false;
    return r;
}

Series e_ominus(const std::vector<Poly>& xs, const Alpha& s, int m, int cutoff,
                std::uint32_t mask) {
    // e_m(X (-) S) = sum_b e_{m+b}(X) e_b(S); e_{m+b} of the finite atom list
    // X vanishes past its size, so the sum is finite.  Inexactness can still
    // arise from truncating large-degree e_b(S).
    int n = static_cast<int>(xs.size());
    int bmax = n - m;
    if (bmax < 0) return Series::zero(cutoff, mask);
    Alpha ax;
    ax.plus = xs;
    std::vector<Poly> ex = e_table(ax, n);
    std::vector<Poly> es = e_table(s, bmax);
    Poly sum;
    bool dropped = false;
    for (int b = std::max(0, -m); b <= bmax; ++b)
        sum += ex[m + b].mul_truncated(es[b], mask, cutoff, &dropped);
    Series r(std::move(sum), cutoff, mask);
    if (dropped) r.exact = false;
    return r;
}

}  // namespace gcp
