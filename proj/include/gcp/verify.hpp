#pragma once

#include <string>
#include <vector>

namespace gcp {

// Bounds for a verification run. Shapes range over the box_rows x box_cols
// box, series are cut past parameter degree `degree`, and the product
// identities are compared through total degree `degree` in the main
// variables as well. `nvars` is the size of each main-variable alphabet;
// identities in two alphabets use `nvars` fresh variables for the second
// one. With `stability` set every suite runs a second time at enlarged
// bounds and any fresh disagreement is reported.
struct VerifyOptions {
    int box_rows = 2;
    int box_cols = 2;
    int nvars = 2;
    int degree = 4;
    unsigned seed = 0;
    bool stability = true;
};

struct Report {
    std::string suite;
    int cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// The suite names accepted by run_verify, in display order.
const std::vector<std::string>& verify_suites();

// Runs one named suite and reports every failed check with the shapes that
// witnessed it. Unknown names throw std::invalid_argument. Case counts come
// from the base run; the stability rerun only appends tagged failures.
Report run_verify(const std::string& suite, const VerifyOptions& opt);

}  // namespace gcp
