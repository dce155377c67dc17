#include "gcp/grothendieck.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "gcp/alphabets.hpp"
#include "gcp/laurent.hpp"
#include "gcp/matrix.hpp"

namespace gcp {

namespace {

Poly alpha_var(int i) { return Poly::variable(Fam::alpha, i); }
Poly beta_var(int i) { return Poly::variable(Fam::beta, i); }
Poly x_var(int i) { return Poly::variable(Fam::x, i); }

// prod_{i<=rows} prod_{j<=nvars} (1 - beta_i x_j), the prefactor of the H
// determinants of both G families.
Poly beta_x_product(int rows, int nvars) {
    Poly c(Int(1));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= nvars; ++j)
            c *= Poly(Int(1)) - beta_var(i) * x_var(j);
    return c;
}

// prod_{i<=rows} prod_{j<=nvars} 1/(1 + alpha_i x_j), the truncated prefactor
// of the E determinants.
Series alpha_x_inverse(int rows, int nvars, int cutoff, uint32_t mask) {
    Series c = Series::one(cutoff, mask);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= nvars; ++j)
            c *= Series::geometric_inverse(alpha_var(i) * x_var(j), cutoff, mask);
    return c;
}

// Factors (1 + [sign] v_k w^{wpow})^{+1 or -1} for k = 1..hi appended to fs.
void push_factors(std::vector<GFFactor>& fs, Fam fam, bool negate, int hi,
                  int wpow, bool numerator) {
    for (int k = 1; k <= hi; ++k) {
        Poly atom = Poly::variable(fam, k);
        if (negate) atom = -atom;
        fs.push_back({std::move(atom), wpow, numerator});
    }
}

}  // namespace

Series jt_series(GKind kind, const Partition& la, const Partition& mu,
                 int nvars, int cutoff, DetForm form, int pad) {
    const uint32_t mask = kMaskParams;
    if (kind == GKind::Dual)
        return Series(jt_dual(la, mu, nvars, form, pad), cutoff, mask);
    std::vector<Poly> xs = x_atoms(nvars);
    if (form == DetForm::H) {
        const int l = std::max(la.length(), mu.length()) + pad;
        std::vector<std::vector<Series>> m(
            l, std::vector<Series>(l, Series::zero(cutoff, mask)));
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= l; ++j) {
                const int shift = la.part(i) - mu.part(j) - i + j;
                if (kind == GKind::Slash) {
                    Alpha a = alpha_interval(mu.part(j), la.part(i), false, true)
                                  .unite(beta_interval(i, j, true, true));
                    m[i - 1][j - 1] = h_ominus(xs, a, shift, cutoff, mask);
                    continue;
                }
                // Dslash columns expand against a vacuum whose lowest
                // surviving mode caps the column sum at mu_j - j + l.  For
                // mu_j >= 1 the cap equals the alphabet size and the sum
                // telescopes into interval form, but for empty inner rows it
                // cuts one term off, so the sum is kept explicit.
                const Alpha qa = alpha_n(mu.part(j) - 1)
                                     .unite(beta_interval(j, l, true, true));
                const Alpha pa = alpha_n(la.part(i))
                                     .unite(beta_interval(i, l, true, true));
                const int cap = mu.part(j) - j + l;
                Series acc = Series::zero(cutoff, mask);
                for (int k = 0; k <= cap; ++k) {
                    Poly ek = esym(qa, k);
                    if (ek.is_zero() && k > 0) continue;
                    if (k % 2 != 0) ek = -ek;
                    acc += h_ominus(xs, pa, shift + k, cutoff, mask)
                               .times_poly(ek);
                }
                m[i - 1][j - 1] = std::move(acc);
            }
        return series_det(m, cutoff, mask).times_poly(beta_x_product(l, nvars));
    }
    const Partition lc = la.conjugate(), mc = mu.conjugate();
    const int l = std::max(la.part(1), mu.part(1)) + pad;
    if (kind == GKind::Dslash) {
        // Mirror of the capped H columns under conjugation of the shapes and
        // exchange of the parameter families.  The x part enters through
        // elementary functions, which vanish past nvars, so every entry is a
        // finite exact sum and the determinant is a polynomial.
        const Alpha xsa = x_alphabet(nvars);
        std::vector<std::vector<Poly>> pm(l, std::vector<Poly>(l));
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= l; ++j) {
                const int shift = lc.part(i) - mc.part(j) - i + j;
                const Alpha qa =
                    interval_atoms(Fam::beta, 1, mc.part(j) - 1, true, true,
                                   true)
                        .unite(interval_atoms(Fam::alpha, j, l, true, true,
                                              false));
                const Alpha pa =
                    interval_atoms(Fam::beta, 1, lc.part(i), true, true, true)
                        .unite(interval_atoms(Fam::alpha, i, l, true, true,
                                              false));
                const int cap = mc.part(j) - j + l;
                Poly acc;
                for (int k = 0; k <= cap; ++k) {
                    Poly ek = esym(qa, k);
                    if (ek.is_zero() && k > 0) continue;
                    if (k % 2 != 0) ek = -ek;
                    Poly conv;
                    for (int b = std::max(0, -(shift + k));
                         shift + k + b <= nvars; ++b)
                        conv += esym(xsa, shift + k + b) * hsym(pa, b);
                    acc += ek * conv;
                }
                pm[i - 1][j - 1] = std::move(acc);
            }
        return Series(poly_det(std::move(pm)), cutoff, mask) *
               alpha_x_inverse(l, nvars, cutoff, mask);
    }
    std::vector<std::vector<Series>> m(
        l, std::vector<Series>(l, Series::zero(cutoff, mask)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            Alpha a = alpha_interval(j, i, false, false)
                          .unite(beta_interval(lc.part(i), mc.part(j), false,
                                               true));
            m[i - 1][j - 1] =
                e_ominus(xs, a, lc.part(i) - mc.part(j) - i + j, cutoff, mask);
        }
    return series_det(m, cutoff, mask) * alpha_x_inverse(l, nvars, cutoff, mask);
}

Poly jt_dual(const Partition& la, const Partition& mu, int nvars, DetForm form,
             int pad) {
    const Alpha xsa = x_alphabet(nvars);
    if (form == DetForm::H) {
        const int l = std::max(la.length(), mu.length()) + pad;
        std::vector<std::vector<Poly>> m(l, std::vector<Poly>(l));
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= l; ++j) {
                Alpha a = xsa.unite(alpha_interval(la.part(i), mu.part(j), true,
                                                   true))
                              .unite(beta_interval(j, i, true, false));
                m[i - 1][j - 1] = hsym(a, la.part(i) - mu.part(j) - i + j);
            }
        return poly_det(std::move(m));
    }
    const Partition lc = la.conjugate(), mc = mu.conjugate();
    const int l = std::max(la.part(1), mu.part(1)) + pad;
    std::vector<std::vector<Poly>> m(l, std::vector<Poly>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            Alpha a = xsa.unite(alpha_interval(i, j, true, false))
                          .unite(beta_interval(mc.part(j), lc.part(i), false,
                                               false));
            m[i - 1][j - 1] = esym(a, lc.part(i) - mc.part(j) - i + j);
        }
    return poly_det(std::move(m));
}

Series stabilized(const std::function<Series(int)>& eval, int cutoff,
                  int max_cutoff) {
    for (int c = std::max(cutoff, 1);; c *= 2) {
        Series lo = eval(c);
        Series hi = eval(c + 2);
        if (equal_truncated(lo.body, hi.body, lo.mask, c)) {
            Series out(lo.body, cutoff, lo.mask);
            out.exact = out.exact && lo.exact;
            return out;
        }
        if (2 * c > max_cutoff)
            throw std::runtime_error(
                "series kept changing under cutoff refinement (cutoff " +
                std::to_string(c) + ")");
    }
}

Series jt_stable(GKind kind, const Partition& la, const Partition& mu,
                 int nvars, int cutoff, DetForm form, int pad, int max_cutoff) {
    return stabilized(
        [&](int c) { return jt_series(kind, la, mu, nvars, c, form, pad); },
        cutoff, max_cutoff);
}

Poly schur_skew(const Partition& la, const Partition& mu, int nvars) {
    const Alpha xsa = x_alphabet(nvars);
    const int l = std::max(la.length(), mu.length());
    std::vector<std::vector<Poly>> m(l, std::vector<Poly>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m[i - 1][j - 1] = hsym(xsa, la.part(i) - mu.part(j) - i + j);
    return poly_det(std::move(m));
}

Series single_row_series(int m, const Poly& b, int xlo, int xhi, int cutoff,
                         std::uint32_t mask) {
    if (m <= 0) return Series(b.pow(-m), cutoff, mask);
    const Alpha xint = var_range(Fam::x, xlo, xhi);
    Poly sum;
    Poly bpow(Int(1));
    for (int a = 0; a <= cutoff; ++a) {
        sum += bpow * hsym(xint, m + a);
        bpow *= b;
    }
    Poly pref(Int(1));
    for (const Poly& xk : xint.plus) pref *= Poly(Int(1)) - b * xk;
    bool dropped = false;
    Series r(pref.mul_truncated(sum, mask, cutoff, &dropped), cutoff, mask);
    if (dropped || (!xint.plus.empty() && !b.is_zero())) r.exact = false;
    return r;
}

Series single_row_det(GKind kind, const Partition& la, const Partition& mu,
                      int nvars, int cutoff, int pad) {
    if (kind == GKind::Dual)
        throw std::invalid_argument(
            "single-row determinants cover the two G families only");
    const uint32_t mask = kMaskParams;
    const int l = std::max(la.length(), mu.length()) + 1 + pad;
    std::vector<std::vector<Series>> m(
        l, std::vector<Series>(l, Series::zero(cutoff, mask)));
    for (int i = 1; i <= l; ++i) {
        const Alpha pa = alpha_n(la.part(i)).unite(beta_interval(i, l, false, true));
        for (int j = 1; j <= l; ++j) {
            const Alpha qa =
                (kind == GKind::Slash)
                    ? alpha_n(mu.part(j)).unite(beta_interval(j, l, false, true))
                    : alpha_n(mu.part(j) - 1).unite(beta_interval(j, l, true, true));
            const int shift = la.part(i) - mu.part(j) - i + j;
            // For Dslash the inner k sum stops at mu_j - j + l, one short of
            // the coefficient alphabet size whenever mu_j = 0.
            const int kcap = (kind == GKind::Dslash)
                                 ? mu.part(j) - j + l
                                 : cutoff + 1;
            Series acc = Series::zero(cutoff, mask);
            for (int t = 0; t <= cutoff; ++t) {
                Poly coef;
                for (int k = 0; k <= std::min(t, kcap); ++k) {
                    Poly ek = esym(qa, k);
                    if (ek.is_zero() && k > 0) break;
                    Poly term = ek * hsym(pa, t - k);
                    coef += (k % 2 == 0) ? term : -term;
                }
                if (coef.is_zero()) continue;
                acc += single_row_series(shift + t, beta_var(i), 1, nvars,
                                         cutoff, mask)
                           .times_poly(coef);
            }
            // past the cutoff the t sum keeps going whenever either alphabet
            // is nonempty, so only the trivial entry is certifiably whole
            if (!pa.empty() || !qa.empty()) acc.exact = false;
            m[i - 1][j - 1] = std::move(acc);
        }
    }
    return series_det(m, cutoff, mask);
}

Series integral_series(GKind kind, const Partition& la, const Partition& mu,
                       int nvars, int cutoff, DetForm side, int pad) {
    const uint32_t mask = kMaskParams;
    const bool hside = (side == DetForm::H);
    const Partition lc = hside ? la : la.conjugate();
    const Partition mc = hside ? mu : mu.conjugate();
    const int l = (hside ? std::max(la.length(), mu.length())
                         : std::max(la.part(1), mu.part(1))) +
                  pad;
    std::vector<std::vector<Series>> m(
        l, std::vector<Series>(l, Series::zero(cutoff, mask)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            const int li = lc.part(i), mj = mc.part(j);
            const int shift = li - mj - i + j;
            std::vector<GFFactor> fs;
            if (kind == GKind::Dslash) {
                // As in jt_series, the Dslash column coefficients cannot be
                // folded into the rational integrand when mu_j = 0: the
                // capped sum keeps one factor short of the full expansion.
                // Only the row alphabet and the x variables stay inside the
                // coefficient extraction.
                Alpha qa;
                if (hside) {
                    qa = alpha_n(mj - 1).unite(beta_interval(j, l, true, true));
                    push_factors(fs, Fam::alpha, false, li, -1, false);
                    for (int c = i; c <= l; ++c)
                        fs.push_back({-beta_var(c), -1, false});
                    push_factors(fs, Fam::x, true, nvars, 1, false);
                } else {
                    qa = interval_atoms(Fam::beta, 1, mj - 1, true, true, true)
                             .unite(interval_atoms(Fam::alpha, j, l, true,
                                                   true, false));
                    push_factors(fs, Fam::beta, false, li, -1, false);
                    for (int c = i; c <= l; ++c)
                        fs.push_back({-alpha_var(c), -1, false});
                    push_factors(fs, Fam::x, false, nvars, 1, true);
                }
                const int cap = mj - j + l;
                Series acc = Series::zero(cutoff, mask);
                for (int k = 0; k <= cap; ++k) {
                    Poly ek = esym(qa, k);
                    if (ek.is_zero() && k > 0) continue;
                    if (k % 2 != 0) ek = -ek;
                    acc += coeff_of(fs, shift + k, cutoff, mask).times_poly(ek);
                }
                m[i - 1][j - 1] = std::move(acc);
                continue;
            }
            if (hside && kind == GKind::Dual) {
                push_factors(fs, Fam::alpha, false, li - 1, 1, true);
                push_factors(fs, Fam::beta, true, j - 1, 1, true);
                push_factors(fs, Fam::alpha, false, mj, 1, false);
                push_factors(fs, Fam::beta, true, i - 1, 1, false);
                push_factors(fs, Fam::x, true, nvars, 1, false);
            } else if (hside) {
                push_factors(fs, Fam::alpha, false, mj, -1, true);
                push_factors(fs, Fam::beta, true, i - 1, -1, true);
                push_factors(fs, Fam::alpha, false, li, -1, false);
                push_factors(fs, Fam::beta, true, j, -1, false);
                push_factors(fs, Fam::x, true, nvars, 1, false);
            } else if (kind == GKind::Dual) {
                push_factors(fs, Fam::alpha, true, j - 1, 1, true);
                push_factors(fs, Fam::beta, false, li - 1, 1, true);
                push_factors(fs, Fam::x, false, nvars, 1, true);
                push_factors(fs, Fam::alpha, true, i - 1, 1, false);
                push_factors(fs, Fam::beta, false, mj, 1, false);
            } else {
                push_factors(fs, Fam::alpha, true, i - 1, -1, true);
                push_factors(fs, Fam::beta, false, mj, -1, true);
                push_factors(fs, Fam::x, false, nvars, 1, true);
                push_factors(fs, Fam::alpha, true, j, -1, false);
                push_factors(fs, Fam::beta, false, li, -1, false);
            }
            m[i - 1][j - 1] = coeff_of(fs, shift, cutoff, mask);
        }
    Series det = series_det(m, cutoff, mask);
    if (kind == GKind::Dual) return det;
    if (hside) return det.times_poly(beta_x_product(l, nvars));
    return det * alpha_x_inverse(l, nvars, cutoff, mask);
}

bool flags_admissible(const Partition& la, const Partition& mu,
                      const std::vector<int>& r, const std::vector<int>& s) {
    const int l = static_cast<int>(r.size());
    if (static_cast<int>(s.size()) != l) return false;
    if (l < la.length() || l < mu.length()) return false;
    for (int i = 0; i < l; ++i)
        if (r[i] < 1 || s[i] < 1) return false;
    for (int i = 1; i < l; ++i)
        if (mu.part(i) < la.part(i + 1) &&
            (r[i - 1] > r[i] || s[i - 1] > s[i]))
            return false;
    return true;
}

Series flagged_row_series(const Partition& la, const Partition& mu,
                          const std::vector<int>& r, const std::vector<int>& s,
                          int cutoff) {
    const uint32_t mask = kMaskParams;
    const int l = static_cast<int>(s.size());
    if (static_cast<int>(r.size()) != l)
        throw std::invalid_argument("flag lists must have equal length");
    if (l < la.length() || l < mu.length())
        throw std::invalid_argument("flags must cover every row of the shapes");
    std::vector<std::vector<Series>> m(
        l, std::vector<Series>(l, Series::zero(cutoff, mask)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            Alpha a = alpha_interval(mu.part(j), la.part(i), false, true)
                          .unite(beta_interval(i, j, true, true));
            std::vector<Poly> xs;
            for (int k = std::max(r[j - 1], 1); k <= s[i - 1]; ++k)
                xs.push_back(x_var(k));
            m[i - 1][j - 1] =
                h_ominus(xs, a, la.part(i) - mu.part(j) - i + j, cutoff, mask);
        }
    Series det = series_det(m, cutoff, mask);
    Poly pref(Int(1));
    for (int i = 1; i <= l; ++i)
        for (int k = r[i - 1]; k <= s[i - 1]; ++k)
            pref *= Poly(Int(1)) - beta_var(i) * x_var(k);
    return det.times_poly(pref);
}

Series flagged_single_row_det(const Partition& la, const Partition& mu,
                              const std::vector<int>& s, int cutoff) {
    const uint32_t mask = kMaskParams;
    const int l = static_cast<int>(s.size());
    if (l < la.length() || l < mu.length())
        throw std::invalid_argument("flags must cover every row of the shapes");
    std::vector<std::vector<Series>> m(
        l, std::vector<Series>(l, Series::zero(cutoff, mask)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            Alpha a = alpha_interval(mu.part(j), la.part(i), false, true)
                          .unite(beta_interval(i, j, false, true));
            const int shift = la.part(i) - mu.part(j) - i + j;
            Series acc = Series::zero(cutoff, mask);
            for (int t = 0; t <= cutoff; ++t) {
                Poly ht = hsym(a, t);
                if (ht.is_zero()) continue;
                acc += single_row_series(shift + t, beta_var(i), 1, s[i - 1],
                                         cutoff, mask)
                           .times_poly(ht);
            }
            if (!(a.plus.empty() &&
                  static_cast<int>(a.minus.size()) <= cutoff))
                acc.exact = false;
            m[i - 1][j - 1] = std::move(acc);
        }
    return series_det(m, cutoff, mask);
}

Poly corner_weight(const Partition& outer, const Partition& inner,
                   bool negated) {
    Poly w(Int(1));
    for (auto [row, col] : outer.cells_minus(inner)) {
        Poly f = alpha_var(col) + beta_var(row);
        w *= negated ? -f : f;
    }
    return w;
}

Series dslash_from_slash(const Partition& la, const Partition& mu, int nvars,
                         int cutoff) {
    Series acc = Series::zero(cutoff, kMaskParams);
    for (const Partition& nu : mu.corner_removals())
        acc += jt_series(GKind::Slash, la, nu, nvars, cutoff)
                   .times_poly(corner_weight(mu, nu, true));
    return acc;
}

Series slash_from_dslash(const Partition& la, const Partition& mu, int nvars,
                         int cutoff) {
    Series acc = Series::zero(cutoff, kMaskParams);
    for (const Partition& nu : subpartitions(mu))
        acc += jt_series(GKind::Dslash, la, nu, nvars, cutoff)
                   .times_poly(corner_weight(mu, nu, false));
    return acc;
}

Series slash_reduce_inner(const Partition& la, const Partition& mu, int nvars,
                          int cutoff) {
    const Partition cap = Partition::intersect(la, mu);
    return jt_series(GKind::Slash, la, cap, nvars, cutoff)
        .times_poly(corner_weight(mu, cap, false));
}

}  // namespace gcp
