#include "gcp/verify.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcp/expansions.hpp"
#include "gcp/fock.hpp"
#include "gcp/grothendieck.hpp"
#include "gcp/partition.hpp"
#include "gcp/poly.hpp"
#include "gcp/render.hpp"
#include "gcp/series.hpp"

namespace gcp {
namespace {

constexpr uint32_t kMaskX = fam_mask(Fam::x);

// Collects case counts and failure strings. The stability rerun keeps the
// base case count and tags any fresh failure it finds.
struct Checker {
    Report rep;
    bool counting = true;
    std::string tag;

    bool check(bool ok) {
        if (counting) ++rep.cases;
        return ok;
    }
    void fail(const std::string& msg) { rep.failures.push_back(msg + tag); }
};

std::string disp(const Partition& p) {
    return p.empty() ? "()" : p.to_string();
}

std::string kind_name(GKind kind) {
    switch (kind) {
        case GKind::Slash: return "G";
        case GKind::Dslash: return "Gds";
        default: return "g";
    }
}

std::string diff_note(const Poly& a, const Poly& b) {
    Poly d = a - b;
    if (d.is_zero()) return "";
    const auto& lead = d.leading();
    return " differs at " + to_string(Poly::monomial(lead.first, lead.second));
}

std::vector<Partition> box_shapes(const VerifyOptions& opt) {
    return partitions_in_box(opt.box_rows, opt.box_cols);
}

Poly shift_x(const Poly& p, int by, int count) {
    std::map<VarKey, Poly> repl;
    for (int i = 1; i <= count; ++i)
        repl[var_key(Fam::x, i)] = Poly::variable(Fam::x, i + by);
    return p.substitute(repl);
}

Poly negate_x(const Poly& p, int count) {
    std::map<VarKey, Poly> repl;
    for (int i = 1; i <= count; ++i)
        repl[var_key(Fam::x, i)] = -Poly::variable(Fam::x, i);
    return p.substitute(repl);
}

// Truncation past total main-variable degree cut and past parameter degree
// cut; the product identities below live in this doubly truncated quotient.
Poly trunc2(const Poly& p, int cut) {
    return p.truncated(kMaskX, cut).truncated(kMaskParams, cut);
}

Poly mul2(const Poly& a, const Poly& b, int cut) {
    return a.mul_truncated(b, kMaskX, cut).truncated(kMaskParams, cut);
}

// Two-alphabet state for the product identities: x_1..x_n and, shifted past
// them, y_1..y_m. Memoizes every series body it evaluates.
struct TwoAlphabet {
    int n, m, cut;
    std::map<std::string, Poly> memo;

    TwoAlphabet(int nvars, int cutv) : n(nvars), m(nvars), cut(cutv) {}

    const Poly& get(const std::string& key,
                    const std::function<Poly()>& mk) {
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, mk()).first;
        return it->second;
    }
    static std::string key(const Partition& a, const Partition& b) {
        return a.to_string() + "|" + b.to_string();
    }

    // G_{la//mu}(x_1..x_n)
    const Poly& gds_x(const Partition& la, const Partition& mu) {
        return get("A" + key(la, mu), [&] {
            return trunc2(jt_series(GKind::Dslash, la, mu, n, cut).body, cut);
        });
    }
    // G_{la'//mu'}(x_1..x_n) with the parameter families swapped
    const Poly& gds_cx(const Partition& la, const Partition& mu) {
        return get("B" + key(la, mu), [&] {
            return trunc2(jt_series(GKind::Dslash, la.conjugate(),
                                    mu.conjugate(), n, cut)
                              .body.swap_families(Fam::alpha, Fam::beta),
                          cut);
        });
    }
    // G_{la//mu}(y_1..y_m)
    const Poly& gds_y(const Partition& la, const Partition& mu) {
        return get("C" + key(la, mu), [&] {
            return trunc2(
                shift_x(jt_series(GKind::Dslash, la, mu, m, cut).body, n, m),
                cut);
        });
    }
    // g_{la/mu}(y_1..y_m)
    const Poly& gd_y(const Partition& la, const Partition& mu) {
        return get("D" + key(la, mu), [&] {
            return trunc2(shift_x(jt_dual(la, mu, m), n, m), cut);
        });
    }
    // g_{la'/mu'}(y_1..y_m) with the parameter families swapped
    const Poly& gd_cy(const Partition& la, const Partition& mu) {
        return get("E" + key(la, mu), [&] {
            return trunc2(shift_x(jt_dual(la.conjugate(), mu.conjugate(), m)
                                      .swap_families(Fam::alpha, Fam::beta),
                                  n, m),
                          cut);
        });
    }
    // g_{la/mu}(x_1..x_n)
    const Poly& gd_x(const Partition& la, const Partition& mu) {
        return get("F" + key(la, mu),
                   [&] { return trunc2(jt_dual(la, mu, n), cut); });
    }
    // g_{la'/mu'}(x_1..x_n) with the parameter families swapped
    const Poly& gd_cx(const Partition& la, const Partition& mu) {
        return get("G" + key(la, mu), [&] {
            return trunc2(jt_dual(la.conjugate(), mu.conjugate(), n)
                              .swap_families(Fam::alpha, Fam::beta),
                          cut);
        });
    }

    // prod_{i<=n, j<=m} of 1/(1 - x_i y_j) or (1 + x_i y_j), truncated
    Poly kernel(bool plus) const {
        Poly k{Int(1)};
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j) {
                Poly atom = Poly::variable(Fam::x, i) *
                            Poly::variable(Fam::x, n + j);
                Poly f{Int(1)};
                if (plus) {
                    f += atom;
                } else {
                    Poly p{Int(1)};
                    for (int e = 1; 2 * e <= cut; ++e) {
                        p = mul2(p, atom, cut);
                        f += p;
                    }
                }
                k = mul2(k, f, cut);
            }
        return k;
    }
};

// Partitions containing `incl` with at most max_rows rows, first part at
// most max_cols and size at most max_size.
std::vector<Partition> sum_range(const Partition& incl, int max_size,
                                 int max_rows, int max_cols) {
    std::vector<Partition> out;
    if (max_rows < 0 || max_cols < 0 || max_size < 0) return out;
    for (const Partition& p : partitions_in_box(max_rows, max_cols))
        if (p.size() <= max_size && p.contains(incl)) out.push_back(p);
    return out;
}

void suite_duality(const VerifyOptions& opt, int bump, Checker& ck) {
    const Poly one{Int(1)};
    for (const Partition& la : box_shapes(opt))
        for (const Partition& mu : box_shapes(opt)) {
            Poly got = dual_pairing(la, mu, bump);
            Poly want = la == mu ? one : Poly();
            if (!ck.check(got == want))
                ck.fail("pairing la=" + disp(la) + " mu=" + disp(mu) +
                        " got " + to_string(got));
        }
}

void suite_branching(const VerifyOptions& opt, int bump, Checker& ck) {
    const int n = opt.nvars, m = opt.nvars, cut = opt.degree + bump;
    for (const Partition& la : box_shapes(opt))
        for (const Partition& mu : box_shapes(opt)) {
            if (!la.contains(mu)) continue;
            std::vector<Partition> nested;
            for (const Partition& nu : subpartitions(la))
                if (nu.contains(mu)) nested.push_back(nu);

            Poly lhs = jt_dual(la, mu, n + m);
            Poly rhs;
            for (const Partition& nu : nested)
                rhs += shift_x(jt_dual(la, nu, m), n, m) * jt_dual(nu, mu, n);
            if (!ck.check(lhs == rhs))
                ck.fail("dual split la=" + disp(la) + " mu=" + disp(mu) +
                        diff_note(lhs, rhs));

            for (GKind kind : {GKind::Slash, GKind::Dslash}) {
                // the skew series does not vanish when mu sticks out of the
                // middle shape, so its split runs over every nu inside la
                const std::vector<Partition>& mids =
                    kind == GKind::Slash ? subpartitions(la) : nested;
                Poly l2 = jt_series(kind, la, mu, n + m, cut).body;
                Poly r2;
                for (const Partition& nu : mids) {
                    Poly left = shift_x(
                        jt_series(GKind::Dslash, la, nu, m, cut).body, n, m);
                    Poly right = jt_series(kind, nu, mu, n, cut).body;
                    r2 += left.mul_truncated(right, kMaskParams, cut);
                }
                if (!ck.check(equal_truncated(l2, r2, kMaskParams, cut)))
                    ck.fail(kind_name(kind) + " split la=" + disp(la) +
                            " mu=" + disp(mu) +
                            diff_note(l2.truncated(kMaskParams, cut),
                                      r2.truncated(kMaskParams, cut)));
            }
        }
}

void suite_cauchy(const VerifyOptions& opt, int bump, Checker& ck) {
    const int cut = opt.degree + bump;
    TwoAlphabet tw(opt.nvars, cut);
    const Poly kminus = tw.kernel(false);
    const Poly kplus = tw.kernel(true);

    for (const Partition& mu : box_shapes(opt))
        for (const Partition& nu : box_shapes(opt)) {
            const Partition meet = Partition::intersect(mu, nu);
            // the quotient factor contributes nothing below main degree
            // |la| - |mu|; unlike the Schur case the dual factor never cuts
            // the row or column counts, its low-degree terms survive any
            // number of extra rows
            const int size_cap = mu.size() + cut;

            for (int id = 1; id <= 4; ++id) {
                Poly lhs;
                for (const Partition& la :
                     sum_range(nu, size_cap, size_cap, size_cap)) {
                    if (!la.contains(mu)) continue;
                    const Poly& g = (id <= 2) ? tw.gd_y(la, nu)
                                              : tw.gd_cy(la, nu);
                    if (g.is_zero()) continue;
                    const Poly& G = (id % 2 == 1) ? tw.gds_x(la, mu)
                                                  : tw.gds_cx(la, mu);
                    lhs += mul2(G, g, cut);
                }
                Poly inner;
                for (const Partition& eta : subpartitions(meet)) {
                    const Poly& g = (id <= 2) ? tw.gd_y(mu, eta)
                                              : tw.gd_cy(mu, eta);
                    const Poly& G = (id % 2 == 1) ? tw.gds_x(nu, eta)
                                                  : tw.gds_cx(nu, eta);
                    inner += mul2(G, g, cut);
                }
                const bool geom = (id == 1 || id == 4);
                Poly rhs = mul2(geom ? kminus : kplus, inner, cut);
                if (!ck.check(lhs == rhs))
                    ck.fail("cauchy id=" + std::to_string(id) +
                            " mu=" + disp(mu) + " nu=" + disp(nu) +
                            diff_note(lhs, rhs));
            }
        }
}

void suite_pieri(const VerifyOptions& opt, int bump, Checker& ck) {
    const int cut = opt.degree + bump;
    TwoAlphabet tw(opt.nvars, cut);
    const Poly kminus = tw.kernel(false);
    const Poly kplus = tw.kernel(true);

    // Per-eta inner sums over la; they depend on mu and eta only.
    auto inner_sum = [&](int id, const Partition& mu,
                         const Partition& eta) -> const Poly& {
        return tw.get("S" + std::to_string(id) + tw.key(mu, eta), [&] {
            // only the quotient factor caps the sum: nothing below main
            // degree |la| minus its inner shape
            const int size_cap =
                (id == 1 || id == 3 ? mu.size() : eta.size()) + cut;
            Poly s;
            for (const Partition& la :
                 sum_range(eta, size_cap, size_cap, size_cap)) {
                if (!la.contains(mu)) continue;
                const Poly* fx = nullptr;
                const Poly* fy = nullptr;
                switch (id) {
                    case 1:
                        fx = &tw.gds_x(la, mu);
                        fy = &tw.gd_y(la, eta);
                        break;
                    case 2:
                        fx = &tw.gd_x(la, mu);
                        fy = &tw.gds_y(la, eta);
                        break;
                    case 3:
                        fx = &tw.gds_cx(la, mu);
                        fy = &tw.gd_y(la, eta);
                        break;
                    default:
                        fx = &tw.gd_cx(la, mu);
                        fy = &tw.gds_y(la, eta);
                }
                if (fx->is_zero() || fy->is_zero()) continue;
                s += mul2(*fx, *fy, cut);
            }
            return s;
        });
    };

    for (const Partition& mu : box_shapes(opt))
        for (const Partition& nu : box_shapes(opt))
            for (int id = 1; id <= 4; ++id) {
                Poly lhs;
                for (const Partition& eta : subpartitions(nu)) {
                    const Poly* a = nullptr;
                    switch (id) {
                        case 1: a = &tw.gds_cx(nu, eta); break;
                        case 2: a = &tw.gd_cx(nu, eta); break;
                        case 3: a = &tw.gds_x(nu, eta); break;
                        default: a = &tw.gd_x(nu, eta);
                    }
                    if (a->is_zero()) continue;
                    lhs += mul2(negate_x(*a, tw.n), inner_sum(id, mu, eta),
                                cut);
                }
                const bool geom = (id == 1 || id == 2);
                const Poly& tail = (id == 1 || id == 3) ? tw.gd_y(mu, nu)
                                                        : tw.gds_y(mu, nu);
                Poly rhs = mul2(geom ? kminus : kplus, tail, cut);
                if (!ck.check(lhs == rhs))
                    ck.fail("pieri id=" + std::to_string(id) +
                            " mu=" + disp(mu) + " nu=" + disp(nu) +
                            diff_note(lhs, rhs));
            }
}

void suite_fock_oracle(const VerifyOptions& opt, int bump, Checker& ck) {
    const int n = opt.nvars, cut = opt.degree + bump;
    for (GKind kind : {GKind::Slash, GKind::Dslash, GKind::Dual})
        for (const Partition& la : box_shapes(opt))
            for (const Partition& mu : box_shapes(opt)) {
                Series want = jt_series(kind, la, mu, n, cut);
                Series fe = fock_matrix_element(kind, la, mu, n, cut);
                Series wk = wick_matrix_element(kind, la, mu, n, cut);
                bool okf =
                    equal_truncated(want.body, fe.body, kMaskParams, cut);
                bool okw =
                    equal_truncated(want.body, wk.body, kMaskParams, cut);
                if (!ck.check(okf && okw))
                    ck.fail(kind_name(kind) + " la=" + disp(la) +
                            " mu=" + disp(mu) +
                            std::string(okf ? "" : " [operator route]") +
                            std::string(okw ? "" : " [pairing route]"));
            }
}

void suite_omega(const VerifyOptions& opt, int bump, Checker& ck) {
    for (const Partition& la : box_shapes(opt)) {
        const int n = std::max(1, la.size()) + bump;
        auto se = schur_expand(jt_dual(la, Partition(), n), n);
        auto tw = omega(se);
        std::map<Partition, Poly> swapped;
        for (const auto& [sh, c] : tw.terms)
            swapped[sh] = c.swap_families(Fam::alpha, Fam::beta);
        auto direct = schur_expand(jt_dual(la.conjugate(), Partition(), n), n);
        if (!ck.check(swapped == direct.terms))
            ck.fail("conjugation la=" + disp(la) +
                    " n=" + std::to_string(n));
    }
}

void suite_corners(const VerifyOptions& opt, int bump, Checker& ck) {
    const Poly one{Int(1)};
    for (const Partition& mu : box_shapes(opt)) {
        for (bool forward : {true, false}) {
            std::map<Partition, Poly> round;
            for (const auto& [nu, w1] : corner_expand(mu, forward))
                for (const auto& [rho, w2] : corner_expand(nu, !forward))
                    round[rho] += w1 * w2;
            bool ok = true;
            for (const auto& [rho, c] : round)
                if (c != (rho == mu ? one : Poly())) ok = false;
            if (!ck.check(ok))
                ck.fail(std::string("roundtrip ") +
                        (forward ? "remove-first" : "fill-first") +
                        " mu=" + disp(mu));
        }
    }

    const int n = opt.nvars, cut = opt.degree + bump;
    for (const Partition& la : box_shapes(opt))
        for (const Partition& mu : box_shapes(opt)) {
            Series sl = jt_series(GKind::Slash, la, mu, n, cut);
            Series ds = jt_series(GKind::Dslash, la, mu, n, cut);
            Series a = dslash_from_slash(la, mu, n, cut);
            if (!ck.check(equal_truncated(a.body, ds.body, kMaskParams, cut)))
                ck.fail("corner sum la=" + disp(la) + " mu=" + disp(mu) +
                        diff_note(a.body.truncated(kMaskParams, cut),
                                  ds.body.truncated(kMaskParams, cut)));
            Series b = slash_from_dslash(la, mu, n, cut);
            if (!ck.check(equal_truncated(b.body, sl.body, kMaskParams, cut)))
                ck.fail("inverse corner sum la=" + disp(la) +
                        " mu=" + disp(mu));
            if (!la.contains(mu)) {
                Series c = slash_reduce_inner(la, mu, n, cut);
                if (!ck.check(
                        equal_truncated(c.body, sl.body, kMaskParams, cut)))
                    ck.fail("reduced inner la=" + disp(la) +
                            " mu=" + disp(mu));
            }
        }
}

void suite_integral(const VerifyOptions& opt, int bump, Checker& ck) {
    const int n = opt.nvars, cut = opt.degree + bump;
    for (GKind kind : {GKind::Slash, GKind::Dslash, GKind::Dual})
        for (const Partition& la : box_shapes(opt))
            for (const Partition& mu : box_shapes(opt)) {
                Series want = jt_series(kind, la, mu, n, cut);
                for (DetForm side : {DetForm::H, DetForm::E}) {
                    Series got = integral_series(kind, la, mu, n, cut, side);
                    if (!ck.check(equal_truncated(got.body, want.body,
                                                  kMaskParams, cut)))
                        ck.fail("coefficient extraction " + kind_name(kind) +
                                (side == DetForm::H ? " rows" : " columns") +
                                " la=" + disp(la) + " mu=" + disp(mu));
                }
                if (kind != GKind::Dual) {
                    Series got = single_row_det(kind, la, mu, n, cut);
                    if (!ck.check(equal_truncated(got.body, want.body,
                                                  kMaskParams, cut)))
                        ck.fail("single-row determinant " + kind_name(kind) +
                                " la=" + disp(la) + " mu=" + disp(mu));
                }
            }
}

void suite_flagged(const VerifyOptions& opt, int bump, Checker& ck) {
    const int n = opt.nvars, cut = opt.degree + bump;

    // fixed admissibility probes: interacting rows need increasing flags
    if (!ck.check(flags_admissible(Partition({2, 2}), Partition(), {1, 1},
                                   {n, n})))
        ck.fail("constant flags rejected on 2,2");
    if (!ck.check(!flags_admissible(Partition({2, 2}), Partition(), {2, 1},
                                    {n, n})))
        ck.fail("decreasing lower flags accepted on 2,2");
    if (!ck.check(flags_admissible(Partition({2, 2}), Partition({2}), {2, 1},
                                   {n, n})))
        ck.fail("independent rows rejected on 2,2/2");

    for (const Partition& la : box_shapes(opt))
        for (const Partition& mu : box_shapes(opt)) {
            if (!la.contains(mu)) continue;
            const int L = la.length();
            const std::vector<int> ones(L, 1), full(L, n);
            std::vector<int> stairs(L), twos(L, 2);
            for (int i = 0; i < L; ++i) stairs[i] = std::min(i + 1, n);

            Series want = jt_series(GKind::Slash, la, mu, n, cut);
            if (!ck.check(flags_admissible(la, mu, ones, full)))
                ck.fail("full flags inadmissible la=" + disp(la) +
                        " mu=" + disp(mu));
            Series a = flagged_row_series(la, mu, ones, full, cut);
            if (!ck.check(
                    equal_truncated(a.body, want.body, kMaskParams, cut)))
                ck.fail("full row flags la=" + disp(la) + " mu=" + disp(mu));
            Series b = flagged_single_row_det(la, mu, full, cut);
            if (!ck.check(
                    equal_truncated(b.body, want.body, kMaskParams, cut)))
                ck.fail("full flags, single-row determinant la=" + disp(la) +
                        " mu=" + disp(mu));
            Series c = flagged_wick_series(la, mu, full, cut);
            if (!ck.check(
                    equal_truncated(c.body, want.body, kMaskParams, cut)))
                ck.fail("full flags, pairing route la=" + disp(la) +
                        " mu=" + disp(mu));

            if (n >= 2) {
                // dropping x_1 from every row is the same series in one
                // fewer variable, shifted
                Series d = flagged_row_series(la, mu, twos, full, cut);
                Poly want2 = shift_x(
                    jt_series(GKind::Slash, la, mu, n - 1, cut).body, 1,
                    n - 1);
                if (!ck.check(
                        equal_truncated(d.body, want2, kMaskParams, cut)))
                    ck.fail("shifted lower flags la=" + disp(la) +
                            " mu=" + disp(mu));
            }

            Series e = flagged_row_series(la, mu, ones, stairs, cut);
            Series f = flagged_single_row_det(la, mu, stairs, cut);
            Series g = flagged_wick_series(la, mu, stairs, cut);
            if (!ck.check(
                    equal_truncated(e.body, f.body, kMaskParams, cut)))
                ck.fail("staircase flags, determinant routes la=" + disp(la) +
                        " mu=" + disp(mu));
            if (!ck.check(
                    equal_truncated(e.body, g.body, kMaskParams, cut)))
                ck.fail("staircase flags, pairing route la=" + disp(la) +
                        " mu=" + disp(mu));
        }
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = {
        "duality", "branching", "cauchy",  "pieri",    "fock-oracle",
        "omega",   "corners",   "integral", "flagged"};
    return names;
}

Report run_verify(const std::string& suite, const VerifyOptions& opt) {
    using Fn = void (*)(const VerifyOptions&, int, Checker&);
    static const std::map<std::string, Fn> table = {
        {"duality", suite_duality},   {"branching", suite_branching},
        {"cauchy", suite_cauchy},     {"pieri", suite_pieri},
        {"fock-oracle", suite_fock_oracle}, {"omega", suite_omega},
        {"corners", suite_corners},   {"integral", suite_integral},
        {"flagged", suite_flagged}};
    auto it = table.find(suite);
    if (it == table.end())
        throw std::invalid_argument("unknown verification suite: " + suite);

    Checker ck;
    ck.rep.suite = suite;
    it->second(opt, 0, ck);
    if (opt.stability && ck.rep.failures.empty()) {
        ck.counting = false;
        ck.tag = " (enlarged bounds)";
        it->second(opt, 1, ck);
    }
    return ck.rep;
}

}  // namespace gcp
