#include "gcp/expansions.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "gcp/alphabets.hpp"
#include "gcp/grothendieck.hpp"
#include "gcp/matrix.hpp"

namespace gcp {

namespace {

struct Entry {
    Alpha atoms;
    int shift;
    bool use_e = false;
};

Entry coeff_entry(CoeffKind kind, const Partition& t, const Partition& w,
                  int i, int j) {
    switch (kind) {
        case CoeffKind::I:
            return {alpha_n(w.part(j)).unite(beta_n(j - 1).negate()),
                    t.part(i) - w.part(j) - i + j, false};
        case CoeffKind::Itilde:
            return {alpha_n(j - 1).unite(beta_n(w.part(j)).negate()),
                    t.part(i) - w.part(j) - i + j, true};
        case CoeffKind::E:
            return {beta_n(i - 1).unite(alpha_n(w.part(i) - 1).negate()),
                    w.part(i) - t.part(j) - i + j, false};
        case CoeffKind::Etilde:
            return {beta_n(w.part(i) - 1).unite(alpha_n(i - 1).negate()),
                    w.part(i) - t.part(j) - i + j, true};
        case CoeffKind::D:
            return {beta_n(i).unite(alpha_n(t.part(i)).negate()),
                    t.part(i) - w.part(j) - i + j, false};
        case CoeffKind::Dtilde:
            return {beta_n(t.part(i)).unite(alpha_n(i).negate()),
                    t.part(i) - w.part(j) - i + j, true};
        case CoeffKind::b:
            return {beta_interval(j, i, true, false)
                        .unite(alpha_n(w.part(i) - 1).negate()),
                    w.part(i) - t.part(j) - i + j, false};
        case CoeffKind::B:
            return {alpha_n(w.part(i))
                        .unite(beta_interval(j, i, true, false).negate()),
                    -w.part(i) + t.part(j) + i - j, false};
    }
    throw std::logic_error("unhandled coefficient kind");
}

Poly coeff_det(CoeffKind kind, const Partition& t, const Partition& w, int l,
               const std::map<VarKey, Poly>* repl) {
    std::vector<std::vector<Poly>> m(l, std::vector<Poly>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            Entry en = coeff_entry(kind, t, w, i, j);
            Poly v =
                en.use_e ? esym(en.atoms, en.shift) : hsym(en.atoms, en.shift);
            if (repl) v = v.substitute(*repl);
            m[i - 1][j - 1] = std::move(v);
        }
    return poly_det(std::move(m));
}

int parity_sign(int d) { return ((d % 2) + 2) % 2 == 0 ? 1 : -1; }

// Families x < y sort first inside a Mono, so the x-part is a prefix.
Mono x_factors(const Mono& m) {
    Mono out;
    for (auto& [k, e] : m.factors) {
        if (key_family(k) != Fam::x) continue;
        out.factors.emplace_back(k, e);
        out.deg += e;
    }
    return out;
}

Mono non_x_factors(const Mono& m) {
    Mono out;
    for (auto& [k, e] : m.factors) {
        if (key_family(k) == Fam::x) continue;
        out.factors.emplace_back(k, e);
        out.deg += e;
    }
    return out;
}

}  // namespace

Poly coeff_matrix(CoeffKind kind, const Partition& top, const Partition& low,
                  int pad) {
    if (pad < 0) throw std::invalid_argument("pad must be >= 0");
    const int l = std::max(top.length(), low.length()) + pad;
    return coeff_det(kind, top, low, l, nullptr);
}

Poly coeff_matrix_conj(CoeffKind kind, const Partition& top,
                       const Partition& low, int pad) {
    if (pad < 0) throw std::invalid_argument("pad must be >= 0");
    if (kind != CoeffKind::b && kind != CoeffKind::B)
        throw std::invalid_argument(
            "conjugate-shape determinants exist for kinds b and B only");
    const Partition tc = top.conjugate();
    const Partition wc = low.conjugate();
    const int l = std::max(top.part(1), low.part(1)) + pad;
    std::vector<std::vector<Poly>> m(l, std::vector<Poly>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            if (kind == CoeffKind::b) {
                Alpha al = alpha_n(i - 1).unite(
                    beta_interval(tc.part(j), wc.part(i), false, false)
                        .negate());
                m[i - 1][j - 1] =
                    hsym(al, wc.part(i) - tc.part(j) - i + j);
            } else {
                Alpha al = beta_interval(tc.part(j), wc.part(i), true, true)
                               .unite(alpha_n(i - 1).negate());
                m[i - 1][j - 1] =
                    hsym(al, -wc.part(i) + tc.part(j) + i - j);
            }
        }
    Poly d = poly_det(std::move(m));
    const int sign = kind == CoeffKind::b ? parity_sign(low.size() - top.size())
                                          : parity_sign(top.size() - low.size());
    return sign < 0 ? -d : d;
}

Poly coeff_matrix_collapsed(CoeffKind kind, const Partition& top,
                            const Partition& low, const Poly& a,
                            const Poly& b) {
    const int l = std::max(top.length(), low.length());
    const int bound =
        std::max({l, top.part(1), low.part(1)}) + 1;
    std::map<VarKey, Poly> repl;
    for (int k = 1; k <= bound; ++k) {
        repl[var_key(Fam::alpha, k)] = a;
        repl[var_key(Fam::beta, k)] = b;
    }
    return coeff_det(kind, top, low, l, &repl);
}

Poly dual_pairing(const Partition& la, const Partition& mu, int pad) {
    if (pad < 0) throw std::invalid_argument("pad must be >= 0");
    const int l = std::max(la.length(), mu.length()) + pad;
    std::vector<std::vector<Poly>> m(l, std::vector<Poly>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            Alpha al = alpha_n(mu.part(j))
                           .unite(beta_n(i - 1))
                           .unite(alpha_n(la.part(i) - 1).negate())
                           .unite(beta_n(j - 1).negate());
            m[i - 1][j - 1] = hsym(al, la.part(i) - mu.part(j) - i + j);
        }
    return poly_det(std::move(m));
}

std::vector<std::pair<Partition, Poly>> corner_expand(const Partition& mu,
                                                      bool forward) {
    std::vector<std::pair<Partition, Poly>> out;
    if (forward) {
        for (const Partition& nu : mu.corner_removals())
            out.emplace_back(nu, corner_weight(mu, nu, true));
    } else {
        for (const Partition& nu : subpartitions(mu))
            out.emplace_back(nu, corner_weight(mu, nu, false));
    }
    return out;
}

SchurExpansion schur_expand(const Poly& p, int nvars) {
    if (nvars < 0) throw std::invalid_argument("nvars must be >= 0");
    for (auto& [m, c] : p.terms())
        for (auto& [k, e] : m.factors)
            if (key_family(k) == Fam::x && key_index(k) > nvars)
                throw std::invalid_argument(
                    "polynomial mentions x beyond the declared count");
    for (int i = 1; i < nvars; ++i) {
        std::map<VarKey, Poly> sw;
        sw[var_key(Fam::x, i)] = Poly::variable(Fam::x, i + 1);
        sw[var_key(Fam::x, i + 1)] = Poly::variable(Fam::x, i);
        if (p.substitute(sw) != p)
            throw std::invalid_argument(
                "polynomial is not symmetric in the x variables");
    }

    SchurExpansion out;
    out.nvars = nvars;
    out.faithful_degree = nvars;
    Poly rest = p;
    Mono prev;
    bool first = true;
    while (!rest.is_zero()) {
        Mono best;
        for (auto& [m, c] : rest.terms()) {
            Mono mx = x_factors(m);
            if (GrlexLess{}(best, mx)) best = std::move(mx);
        }
        if (!first && !GrlexLess{}(best, prev))
            throw std::logic_error("schur peeling failed to make progress");
        prev = best;
        first = false;

        std::vector<int> parts;
        for (int i = 1; i <= nvars; ++i)
            parts.push_back(best.exponent(var_key(Fam::x, i)));
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1])
                throw std::invalid_argument(
                    "leading x-exponent is not a partition; the polynomial "
                    "cannot be symmetric");
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        Partition la(std::move(parts));

        Poly coeff;
        for (auto& [m, c] : rest.terms())
            if (x_factors(m) == best)
                coeff += Poly::monomial(non_x_factors(m), c);
        rest -= coeff * schur_skew(la, Partition(), nvars);
        out.terms.emplace(std::move(la), std::move(coeff));
    }
    return out;
}

Poly schur_assemble(const SchurExpansion& se) {
    Poly out;
    for (auto& [la, c] : se.terms)
        out += c * schur_skew(la, Partition(), se.nvars);
    return out;
}

SchurExpansion omega(const SchurExpansion& se) {
    SchurExpansion out;
    out.nvars = se.nvars;
    out.faithful_degree = se.faithful_degree;
    for (auto& [la, c] : se.terms) {
        if (la.size() > se.faithful_degree)
            throw std::domain_error(
                "term outside the faithful conjugation window");
        out.terms.emplace(la.conjugate(), c);
    }
    return out;
}

std::map<Partition, Poly> decompose_one_param(const Partition& la, bool g_side,
                                              int extra) {
    if (extra < 0) throw std::invalid_argument("extra must be >= 0");
    std::map<Partition, Poly> out;
    if (g_side) {
        for (const Partition& mu : subpartitions(la)) {
            Poly c = coeff_matrix(CoeffKind::b, mu, la);
            if (!c.is_zero()) out.emplace(mu, std::move(c));
        }
        return out;
    }
    for (const Partition& mu :
         partitions_in_box(la.length(), la.part(1) + extra)) {
        if (!mu.contains(la)) continue;
        if (mu.size() > la.size() + extra) continue;
        Poly c = coeff_matrix(CoeffKind::B, mu, la);
        if (!c.is_zero()) out.emplace(mu, std::move(c));
    }
    return out;
}

}  // namespace gcp
