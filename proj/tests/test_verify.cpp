#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "gcp/verify.hpp"

using namespace gcp;

namespace {

VerifyOptions small_opts() {
    VerifyOptions opt;
    opt.box_rows = 2;
    opt.box_cols = 2;
    opt.nvars = 2;
    opt.degree = 3;
    return opt;
}

void expect_clean(const Report& rep, int cases) {
    CAPTURE(rep.suite);
    for (const auto& f : rep.failures) {
        CAPTURE(f);
        CHECK(false);
    }
    CHECK(rep.ok());
    CHECK(rep.cases == cases);
}

}  // namespace

TEST_CASE("suite registry") {
    CHECK(verify_suites().size() == 9);
    CHECK_THROWS_AS(run_verify("nonsense", VerifyOptions{}),
                    std::invalid_argument);
}

TEST_CASE("pairing suite over the 2x2 box") {
    VerifyOptions opt = small_opts();
    expect_clean(run_verify("duality", opt), 36);
    opt.stability = false;
    expect_clean(run_verify("duality", opt), 36);
}

TEST_CASE("alphabet-splitting suite") {
    // 20 nested pairs in the 2x2 box, three identities each
    expect_clean(run_verify("branching", small_opts()), 60);
}

TEST_CASE("kernel-product suites") {
    expect_clean(run_verify("cauchy", small_opts()), 144);
    expect_clean(run_verify("pieri", small_opts()), 144);
}

TEST_CASE("operator-engine suite") {
    expect_clean(run_verify("fock-oracle", small_opts()), 108);
}

TEST_CASE("conjugation suite") {
    expect_clean(run_verify("omega", small_opts()), 6);
}

TEST_CASE("corner-weight suite") {
    // two roundtrips per shape, then 2 series checks per pair plus one more
    // for each non-nested pair
    expect_clean(run_verify("corners", small_opts()), 12 + 72 + 16);
}

TEST_CASE("coefficient-extraction suite") {
    // three families times two sides per pair, plus two single-row variants
    expect_clean(run_verify("integral", small_opts()), 216 + 72);
}

TEST_CASE("flagged suite") {
    // three fixed probes, then seven checks per nested pair
    expect_clean(run_verify("flagged", small_opts()), 3 + 7 * 20);
}
