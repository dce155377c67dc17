#pragma once

#include <cstdint>
#include <vector>

#include "gcp/poly.hpp"
#include "gcp/series.hpp"

namespace gcp {

// One factor (1 + atom * w^wpow)^{+1 or -1} of a generating product in the
// formal variable w. `numerator` true means the factor itself, false its
// geometric-series inverse.
struct GFFactor {
    Poly atom;
    int wpow = 1;  // +1 or -1
    bool numerator = true;
};

// Coefficient of w^target in the product of the factors, with the graded
// families truncated at `cutoff`.
//
// Exponents are tracked only inside a finite window around [0, target]: a
// factor can lower the w-exponent only at the price of at least one unit of
// graded degree (enforced below), so terms that stray further than
// cutoff + 2 above the reachable range can never come back to the target and
// are safe to discard.
Series coeff_of(const std::vector<GFFactor>& factors, int target, int cutoff,
                std::uint32_t mask = kMaskParams);

}  // namespace gcp
