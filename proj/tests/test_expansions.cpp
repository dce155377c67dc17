#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <vector>

#include "doctest.h"
#include "gcp/expansions.hpp"
#include "gcp/fock.hpp"
#include "gcp/grothendieck.hpp"
#include "gcp/matrix.hpp"
#include "gcp/partition.hpp"
#include "gcp/poly.hpp"
#include "gcp/series.hpp"

using namespace gcp;

namespace {

Poly A(int i) { return Poly::variable(Fam::alpha, i); }
Poly B(int i) { return Poly::variable(Fam::beta, i); }
Poly X(int i) { return Poly::variable(Fam::x, i); }
Partition P(const std::string& s) { return Partition::parse(s); }
const Poly kOne{Int(1)};

// Sum over eta inside mu and nu containing la of
// star(mu, eta) * s_{nu/eta} * upper(nu, la), the infinite expansions cut at
// |nu| <= |la| + cut. The bra side expands with the inner shape on top for
// the D kinds and below for the E kinds. With conj_shapes the Schur factor
// uses the transposed shapes (the tilde formulas).
Poly quotient_resum(CoeffKind starkind, CoeffKind upkind, const Partition& la,
                    const Partition& mu, int n, int cut, bool conj_shapes) {
    const bool inner_on_top =
        starkind == CoeffKind::D || starkind == CoeffKind::Dtilde;
    Poly got;
    for (const Partition& eta : subpartitions(mu)) {
        Poly star = inner_on_top ? coeff_matrix(starkind, mu, eta)
                                 : coeff_matrix(starkind, eta, mu);
        if (star.is_zero()) continue;
        for (const Partition& nu :
             partitions_in_box(mu.length() + n + 2, la.part(1) + cut)) {
            if (!nu.contains(la)) continue;
            if (nu.size() > la.size() + cut) continue;
            Poly s = conj_shapes
                         ? schur_skew(nu.conjugate(), eta.conjugate(), n)
                         : schur_skew(nu, eta, n);
            if (s.is_zero()) continue;
            got += star * s * coeff_matrix(upkind, nu, la);
        }
    }
    return got;
}

Poly dual_resum(CoeffKind starkind, CoeffKind lowkind, const Partition& la,
                const Partition& mu, int n, bool conj_shapes) {
    Poly got;
    for (const Partition& eta : subpartitions(la)) {
        if (!eta.contains(mu)) continue;
        for (const Partition& nu : subpartitions(la)) {
            if (!nu.contains(eta)) continue;
            Poly s = conj_shapes
                         ? schur_skew(nu.conjugate(), eta.conjugate(), n)
                         : schur_skew(nu, eta, n);
            if (s.is_zero()) continue;
            got += coeff_matrix(starkind, eta, mu) * s *
                   coeff_matrix(lowkind, nu, la);
        }
    }
    return got;
}

}  // namespace

TEST_CASE("pinned coefficient determinants") {
    CHECK(coeff_matrix(CoeffKind::D, P("1"), P("")) == A(1) + B(1));
    CHECK(coeff_matrix(CoeffKind::I, P("2"), P("1")) == -A(1));
    CHECK(coeff_matrix(CoeffKind::I, P("1,1"), P("1")) == -B(1));
    CHECK(coeff_matrix(CoeffKind::E, P("1"), P("2")) == A(1));
    CHECK(coeff_matrix(CoeffKind::E, P("1"), P("1,1")) == B(1));

    CHECK(coeff_matrix(CoeffKind::b, P("1,1"), P("2,1")) == A(1));
    CHECK(coeff_matrix(CoeffKind::b, P("2,1"), P("2,2")) == A(1));
    CHECK(coeff_matrix(CoeffKind::b, P("1,1"), P("2,2")) ==
          A(1) * A(1) + A(1) * B(1));

    CHECK(coeff_matrix(CoeffKind::B, P("2"), P("1")) == -A(1));
    CHECK(coeff_matrix(CoeffKind::B, P("3"), P("1")) == A(1) * A(1));
    CHECK(coeff_matrix(CoeffKind::B, P("3"), P("2")) == -A(1) - A(2));
    CHECK(coeff_matrix(CoeffKind::B, P("2,1"), P("1,1")) == -A(1));
    CHECK(coeff_matrix(CoeffKind::B, P("2,2"), P("1,1")) == -A(1) * B(1));
    CHECK(coeff_matrix(CoeffKind::B, P("3,1"), P("1,1")) == A(1) * A(1));
    CHECK(coeff_matrix(CoeffKind::B, P("3,2"), P("1,1")) ==
          A(1) * A(1) * B(1));
    CHECK(coeff_matrix(CoeffKind::B, P("3,3"), P("1,1")) ==
          A(1) * A(1) * B(1) * B(1));
}

TEST_CASE("support and unit diagonal of the change-of-family coefficients") {
    for (const Partition& la : partitions_in_box(3, 3))
        for (const Partition& mu : partitions_in_box(3, 3)) {
            CAPTURE(la.to_string());
            CAPTURE(mu.to_string());
            if (!la.contains(mu))
                CHECK(coeff_matrix(CoeffKind::b, mu, la).is_zero());
            if (!mu.contains(la))
                CHECK(coeff_matrix(CoeffKind::B, mu, la).is_zero());
        }
    for (const Partition& la : partitions_in_box(3, 3)) {
        CHECK(coeff_matrix(CoeffKind::b, la, la) == kOne);
        CHECK(coeff_matrix(CoeffKind::B, la, la) == kOne);
    }
    // containment is not sufficient on the quotient side: a longer shape
    // never appears
    CHECK(coeff_matrix(CoeffKind::B, P("1,1"), P("1")).is_zero());
    CHECK(coeff_matrix(CoeffKind::B, P("2,1,1"), P("2,1")).is_zero());
}

TEST_CASE("transposed-shape determinants give the same coefficients") {
    for (const Partition& la : partitions_in_box(3, 3))
        for (const Partition& mu : partitions_in_box(3, 3)) {
            CAPTURE(la.to_string());
            CAPTURE(mu.to_string());
            CHECK(coeff_matrix(CoeffKind::b, mu, la) ==
                  coeff_matrix_conj(CoeffKind::b, mu, la));
            CHECK(coeff_matrix(CoeffKind::B, mu, la) ==
                  coeff_matrix_conj(CoeffKind::B, mu, la));
        }
    CHECK_THROWS_AS(coeff_matrix_conj(CoeffKind::I, P("1"), P("1")),
                    std::invalid_argument);
}

TEST_CASE("padding never changes a coefficient determinant") {
    const std::vector<CoeffKind> kinds = {
        CoeffKind::I, CoeffKind::Itilde, CoeffKind::E, CoeffKind::Etilde,
        CoeffKind::D, CoeffKind::Dtilde, CoeffKind::b, CoeffKind::B};
    for (CoeffKind kind : kinds)
        for (const Partition& t : partitions_in_box(2, 2))
            for (const Partition& w : partitions_in_box(2, 2)) {
                CAPTURE(t.to_string());
                CAPTURE(w.to_string());
                const Poly base = coeff_matrix(kind, t, w, 0);
                CHECK(coeff_matrix(kind, t, w, 1) == base);
                CHECK(coeff_matrix(kind, t, w, 2) == base);
            }
    for (const Partition& t : partitions_in_box(2, 2))
        for (const Partition& w : partitions_in_box(2, 2)) {
            CHECK(coeff_matrix_conj(CoeffKind::b, t, w, 1) ==
                  coeff_matrix_conj(CoeffKind::b, t, w, 0));
            CHECK(coeff_matrix_conj(CoeffKind::B, t, w, 1) ==
                  coeff_matrix_conj(CoeffKind::B, t, w, 0));
        }
}

TEST_CASE("collapsing the parameters commutes with the determinant") {
    const Poly a = Poly::variable(Fam::aux, 1);
    const Poly b = Poly::variable(Fam::aux, 2);
    std::map<VarKey, Poly> repl;
    for (int k = 1; k <= 8; ++k) {
        repl[var_key(Fam::alpha, k)] = a;
        repl[var_key(Fam::beta, k)] = b;
    }
    const std::vector<CoeffKind> kinds = {CoeffKind::b, CoeffKind::B,
                                          CoeffKind::I, CoeffKind::D};
    for (CoeffKind kind : kinds)
        for (const Partition& t : partitions_in_box(2, 3))
            for (const Partition& w : partitions_in_box(2, 3)) {
                CAPTURE(t.to_string());
                CAPTURE(w.to_string());
                CHECK(coeff_matrix_collapsed(kind, t, w, a, b) ==
                      coeff_matrix(kind, t, w).substitute(repl));
            }
}

TEST_CASE("the two dressed families pair to the identity") {
    for (const Partition& la : partitions_in_box(2, 2))
        for (const Partition& mu : partitions_in_box(2, 2)) {
            CAPTURE(la.to_string());
            CAPTURE(mu.to_string());
            const Poly want = la == mu ? kOne : Poly();
            CHECK(dual_pairing(la, mu) == want);
            CHECK(dual_pairing(la, mu, 2) == want);
        }
    CHECK(dual_pairing(P("3,2,1"), P("3,2,1")) == kOne);
    CHECK(dual_pairing(P("3,2,1"), P("3,1,1")).is_zero());
    CHECK(dual_pairing(P("3,1,1"), P("3,2,1")).is_zero());
}

TEST_CASE("tilde determinants are the transposed-shape twins") {
    for (const Partition& t : partitions_in_box(3, 3))
        for (const Partition& w : partitions_in_box(3, 3)) {
            CAPTURE(t.to_string());
            CAPTURE(w.to_string());
            CHECK(coeff_matrix(CoeffKind::Itilde, t, w) ==
                  coeff_matrix(CoeffKind::I, t.conjugate(), w.conjugate()));
            CHECK(coeff_matrix(CoeffKind::Dtilde, t, w) ==
                  coeff_matrix(CoeffKind::D, t.conjugate(), w.conjugate()));
            CHECK(coeff_matrix(CoeffKind::Etilde, t, w) ==
                  coeff_matrix(CoeffKind::E, t.conjugate(), w.conjugate()));
        }
}

TEST_CASE("tilde determinants swap the parameter families") {
    for (const Partition& t : partitions_in_box(3, 3))
        for (const Partition& w : partitions_in_box(3, 3)) {
            CAPTURE(t.to_string());
            CAPTURE(w.to_string());
            CHECK(coeff_matrix(CoeffKind::Itilde, t, w) ==
                  coeff_matrix(CoeffKind::I, t, w)
                      .swap_families(Fam::alpha, Fam::beta));
            CHECK(coeff_matrix(CoeffKind::Dtilde, t, w) ==
                  coeff_matrix(CoeffKind::D, t, w)
                      .swap_families(Fam::alpha, Fam::beta));
            CHECK(coeff_matrix(CoeffKind::Etilde, t, w) ==
                  coeff_matrix(CoeffKind::E, t, w)
                      .swap_families(Fam::alpha, Fam::beta));
        }
}

TEST_CASE("coefficient families have fixed coefficient signs") {
    for (const Partition& t : partitions_in_box(3, 3))
        for (const Partition& w : partitions_in_box(3, 3)) {
            CAPTURE(t.to_string());
            CAPTURE(w.to_string());
            const Poly pd = coeff_matrix(CoeffKind::D, t, w);
            const Poly pe = coeff_matrix(CoeffKind::E, t, w);
            const Poly pi = coeff_matrix(CoeffKind::I, t, w);
            const Poly pb = coeff_matrix(CoeffKind::b, t, w);
            const Poly pB = coeff_matrix(CoeffKind::B, t, w);
            for (auto& [m, c] : pd.terms()) CHECK(c > 0);
            for (auto& [m, c] : pe.terms()) CHECK(c > 0);
            for (auto& [m, c] : pb.terms()) CHECK(c > 0);
            // the raising coefficients alternate with the total degree
            for (auto& [m, c] : pi.terms())
                CHECK((m.deg % 2 == 0 ? c > 0 : c < 0));
            // the quotient-side connection alternates with the a-degree only
            for (auto& [m, c] : pB.terms())
                CHECK((m.graded_deg(fam_mask(Fam::alpha)) % 2 == 0 ? c > 0
                                                                   : c < 0));
        }
}

TEST_CASE("dressed-state coefficients match the fermionic expansions") {
    const int cut = 4;
    const int rows = 3;
    Window w = default_window(2, rows, cut);
    for (const Partition& la : partitions_in_box(2, 2)) {
        FockVector up = upper_ket(la, rows, w, cut);
        FockVector low = lower_ket(la, rows, w, cut);
        FockVector dbl = dbl_bracket_star(la, rows, w, cut);
        for (const Partition& nu : partitions_in_box(2, 2)) {
            CAPTURE(la.to_string());
            CAPTURE(nu.to_string());
            FockVector base = basis_state(nu, 0, w.lo, w.hi, cut);
            CHECK(equal_truncated(coeff_matrix(CoeffKind::I, nu, la),
                                  dot(base, up).body, kMaskParams, cut));
            CHECK(equal_truncated(coeff_matrix(CoeffKind::E, nu, la),
                                  dot(base, low).body, kMaskParams, cut));
            CHECK(equal_truncated(coeff_matrix(CoeffKind::D, la, nu),
                                  dot(dbl, base).body, kMaskParams, cut));
        }
    }
}

TEST_CASE("matrix elements rebuild the dual family exactly") {
    CHECK(dual_resum(CoeffKind::I, CoeffKind::E, P("2,1"), P("1"), 2, false) ==
          jt_dual(P("2,1"), P("1"), 2));
    CHECK(dual_resum(CoeffKind::I, CoeffKind::E, P("2,2"), P(""), 2, false) ==
          jt_dual(P("2,2"), P(""), 2));
    CHECK(dual_resum(CoeffKind::Itilde, CoeffKind::Etilde, P("3,1"), P("1"), 3,
                     true) == jt_dual(P("2,1,1"), P("1"), 3));
}

TEST_CASE("matrix elements rebuild the quotient families through a cutoff") {
    const int cut = 3;
    SUBCASE("plain skew") {
        Series want = jt_series(GKind::Slash, P("1"), P(""), 2, cut);
        Poly got = quotient_resum(CoeffKind::D, CoeffKind::I, P("1"), P(""), 2,
                                  cut, false);
        CHECK(equal_truncated(got, want.body, kMaskParams, cut));
    }
    SUBCASE("plain skew, nontrivial inner shape") {
        Series want = jt_series(GKind::Slash, P("2,1"), P("1"), 2, cut);
        Poly got = quotient_resum(CoeffKind::D, CoeffKind::I, P("2,1"), P("1"),
                                  2, cut, false);
        CHECK(equal_truncated(got, want.body, kMaskParams, cut));
    }
    SUBCASE("quotient skew") {
        Series want = jt_series(GKind::Dslash, P("1"), P("1"), 1, cut);
        Poly got = quotient_resum(CoeffKind::E, CoeffKind::I, P("1"), P("1"),
                                  1, cut, false);
        CHECK(equal_truncated(got, want.body, kMaskParams, cut));
    }
    SUBCASE("quotient skew, two rows") {
        Series want = jt_series(GKind::Dslash, P("2,1"), P("1"), 2, cut);
        Poly got = quotient_resum(CoeffKind::E, CoeffKind::I, P("2,1"), P("1"),
                                  2, cut, false);
        CHECK(equal_truncated(got, want.body, kMaskParams, cut));
    }
    SUBCASE("transposed shapes via the tilde coefficients") {
        Series want = jt_series(GKind::Slash, P("1,1"), P(""), 2, cut);
        Poly got = quotient_resum(CoeffKind::Dtilde, CoeffKind::Itilde, P("2"),
                                  P(""), 2, cut, true);
        CHECK(equal_truncated(got, want.body, kMaskParams, cut));

        Series wantd = jt_series(GKind::Dslash, P("2,1"), P("1"), 2, cut);
        Poly gotd = quotient_resum(CoeffKind::Etilde, CoeffKind::Itilde,
                                   P("2,1"), P("1"), 2, cut, true);
        CHECK(equal_truncated(gotd, wantd.body, kMaskParams, cut));
    }
}

TEST_CASE("corner expansions carry cell weights") {
    auto empty_fwd = corner_expand(P(""), true);
    REQUIRE(empty_fwd.size() == 1);
    CHECK(empty_fwd[0].first == P(""));
    CHECK(empty_fwd[0].second == kOne);

    auto fwd = corner_expand(P("2"), true);
    REQUIRE(fwd.size() == 2);
    CHECK(fwd[0].first == P("2"));
    CHECK(fwd[0].second == kOne);
    CHECK(fwd[1].first == P("1"));
    CHECK(fwd[1].second == -(A(2) + B(1)));

    auto inv = corner_expand(P("2"), false);
    REQUIRE(inv.size() == 3);  // every subshape of (2)
}

TEST_CASE("corner expansions invert each other") {
    for (const Partition& mu : {P("2,1"), P("2,2"), P("3,1")}) {
        CAPTURE(mu.to_string());
        std::map<Partition, Poly> fwd_then_inv;
        for (auto& [nu, wf] : corner_expand(mu, true))
            for (auto& [rho, wi] : corner_expand(nu, false))
                fwd_then_inv[rho] += wf * wi;
        for (auto& [rho, c] : fwd_then_inv) {
            CAPTURE(rho.to_string());
            CHECK(c == (rho == mu ? kOne : Poly()));
        }

        std::map<Partition, Poly> inv_then_fwd;
        for (auto& [nu, wi] : corner_expand(mu, false))
            for (auto& [rho, wf] : corner_expand(nu, true))
                inv_then_fwd[rho] += wi * wf;
        for (auto& [rho, c] : inv_then_fwd) {
            CAPTURE(rho.to_string());
            CHECK(c == (rho == mu ? kOne : Poly()));
        }
    }
}

TEST_CASE("schur expansion by leading-monomial peeling") {
    auto se = schur_expand(X(1) + X(2), 2);
    REQUIRE(se.terms.size() == 1);
    CHECK(se.terms.at(P("1")) == kOne);
    CHECK(se.nvars == 2);
    CHECK(se.faithful_degree == 2);

    auto idem = schur_expand(schur_skew(P("2,1"), P(""), 3), 3);
    REQUIRE(idem.terms.size() == 1);
    CHECK(idem.terms.at(P("2,1")) == kOne);

    // one-row quotient function, first order in the parameters
    Series g1 = jt_series(GKind::Slash, P("1"), P(""), 2, 1);
    auto ge = schur_expand(g1.body, 2);
    REQUIRE(ge.terms.size() == 3);
    CHECK(ge.terms.at(P("1")) == kOne);
    CHECK(ge.terms.at(P("2")) == -A(1));
    CHECK(ge.terms.at(P("1,1")) == -B(1));

    // round trip through assembly
    Poly p = jt_dual(P("2,2"), P(""), 2);
    CHECK(schur_assemble(schur_expand(p, 2)) == p);

    CHECK_THROWS_AS(schur_expand(X(1) + X(1) * X(2), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(schur_expand(X(3), 2), std::invalid_argument);
}

TEST_CASE("low-degree schur coefficients of the two-row quotient function") {
    const int n = 4, cut = 3;
    Series s = jt_series(GKind::Slash, P("1,1"), P(""), n, cut);
    auto se = schur_expand(s.body, n);
    CHECK(se.terms.at(P("1,1")) == kOne);
    CHECK(se.terms.at(P("2,1")) == -A(1));
    CHECK(se.terms.at(P("1,1,1")) == -B(1) - B(2));
    CHECK(se.terms.at(P("3,1")) == A(1) * A(1));
    CHECK(se.terms.at(P("2,1,1")) == A(1) * B(1) + A(1) * B(2));
    CHECK(se.terms.at(P("1,1,1,1")) ==
          B(1) * B(1) + B(1) * B(2) + B(2) * B(2));
    CHECK(se.terms.find(P("2,2")) == se.terms.end());
}

TEST_CASE("index conjugation of schur expansions") {
    auto se = schur_expand(X(1) + X(2), 2);
    auto tw = omega(se);
    REQUIRE(tw.terms.size() == 1);
    CHECK(tw.terms.at(P("1")) == kOne);

    auto big = schur_expand(jt_dual(P("2,1"), P(""), 3), 3);
    auto twice = omega(omega(big));
    CHECK(twice.terms == big.terms);

    // a degree-2 term cannot be conjugated inside a 1-variable window
    auto narrow = schur_expand(X(1) * X(1), 1);
    CHECK_THROWS_AS(omega(narrow), std::domain_error);
}

TEST_CASE("conjugating the dual functions swaps the parameter families") {
    for (const Partition& la : partitions_in_box(2, 3)) {
        CAPTURE(la.to_string());
        const int n = std::max(1, la.size());
        auto se = omega(schur_expand(jt_dual(la, P(""), n), n));
        std::map<Partition, Poly> swapped;
        for (auto& [sh, c] : se.terms)
            swapped[sh] = c.swap_families(Fam::alpha, Fam::beta);
        auto direct = schur_expand(jt_dual(la.conjugate(), P(""), n), n);
        CHECK(swapped == direct.terms);
    }
}

TEST_CASE("one-parameter decomposition of the dual family") {
    auto triv = decompose_one_param(P("1"), true);
    REQUIRE(triv.size() == 1);
    CHECK(triv.at(P("1")) == kOne);

    auto dec = decompose_one_param(P("2,2,2"), true);
    REQUIRE(dec.size() == 4);
    CHECK(dec.at(P("2,2,2")) == kOne);
    CHECK(dec.at(P("2,2,1")) == A(1));
    CHECK(dec.at(P("2,1,1")) == A(1) * (A(1) + B(2)));
    CHECK(dec.at(P("1,1,1")) == A(1) * (A(1) + B(1)) * (A(1) + B(2)));

    // resummation against the one-parameter specialization, exact
    for (const Partition& la : {P("2,1"), P("2,2")}) {
        CAPTURE(la.to_string());
        const int n = 2;
        Poly got;
        for (auto& [mu, c] : decompose_one_param(la, true))
            got += c * jt_dual(mu, P(""), n).set_family_zero(Fam::alpha);
        CHECK(got == jt_dual(la, P(""), n));
    }
}

TEST_CASE("one-parameter decomposition of the quotient family") {
    auto triv = decompose_one_param(P("2,1"), false, 0);
    REQUIRE(triv.size() == 1);
    CHECK(triv.at(P("2,1")) == kOne);

    auto dec = decompose_one_param(P("1,1"), false, 3);
    REQUIRE(dec.size() == 6);
    CHECK(dec.at(P("1,1")) == kOne);
    CHECK(dec.at(P("2,1")) == -A(1));
    CHECK(dec.at(P("2,2")) == -A(1) * B(1));
    CHECK(dec.at(P("3,1")) == A(1) * A(1));
    CHECK(dec.at(P("3,2")) == A(1) * A(1) * B(1));
    CHECK(dec.at(P("4,1")) == -A(1) * A(1) * A(1));

    // resummation through the truncation order
    const int cut = 4;
    for (const Partition& la : {P("1"), P("1,1")}) {
        CAPTURE(la.to_string());
        const int n = la.length();
        Series want = jt_series(GKind::Slash, la, P(""), n, cut);
        Poly got;
        for (auto& [mu, c] : decompose_one_param(la, false, cut)) {
            Series gmu = jt_series(GKind::Slash, mu, P(""), n, cut);
            got += c * gmu.body.set_family_zero(Fam::alpha);
        }
        CHECK(equal_truncated(got, want.body, kMaskParams, cut));
    }
}

TEST_CASE("collapsed large decompositions specialize to two parameters") {
    const Poly a = Poly::variable(Fam::aux, 1);
    const Poly b = Poly::variable(Fam::aux, 2);
    auto pw = [&](const Poly& base, int e) { return base.pow(e); };

    Poly v = coeff_matrix_collapsed(CoeffKind::b, P("5,1,1,1,1"),
                                    P("5,4,3,2,1"), a, b);
    Poly want = pw(a, 6) + Int(3) * pw(a, 5) * b + Int(3) * pw(a, 4) * pw(b, 2) +
                pw(a, 3) * pw(b, 3);
    CHECK(v == want);
}
