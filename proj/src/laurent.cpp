#include "gcp/laurent.hpp"

#include <stdexcept>

namespace gcp {

namespace {

// Every term of a down-moving atom must carry graded degree, otherwise the
// window pruning argument breaks (an x-only factor could walk down forever).
void check_down_cost(const GFFactor& f, std::uint32_t mask) {
    if (f.wpow != 1 && f.wpow != -1)
        throw std::invalid_argument("factor exponent must be +1 or -1");
    if (f.wpow == 1) return;
    for (auto& [m, c] : f.atom.terms())
        if (m.graded_deg(mask) < 1)
            throw std::invalid_argument(
                "w^-1 factors need atoms of positive graded degree");
}

}  // namespace

Series coeff_of(const std::vector<GFFactor>& factors, int target, int cutoff,
                std::uint32_t mask) {
    const int lo = std::min(0, target) - cutoff - 2;
    const int hi = std::max(0, target) + cutoff + 2;  // inclusive
    const int size = hi - lo + 1;
    std::vector<Poly> L(size);
    bool dropped = false;

    auto at = [&](int q) -> Poly& { return L[q - lo]; };
    at(0) = Poly(Int(1));

    for (const GFFactor& f : factors) {
        check_down_cost(f, mask);
        const int p = f.wpow;
        if (f.numerator) {
            // L'[q] = L[q] + atom * L[q - p]; iterate against the shift so
            // only old values are read.
            if (p == 1) {
                for (int q = hi; q >= lo; --q)
                    if (q - p >= lo && q - p <= hi)
                        at(q) += f.atom.mul_truncated(at(q - p), mask, cutoff, &dropped);
            } else {
                for (int q = lo; q <= hi; ++q)
                    if (q - p >= lo && q - p <= hi)
                        at(q) += f.atom.mul_truncated(at(q - p), mask, cutoff, &dropped);
            }
        } else {
            // (1 + atom w^p) L' = L, i.e. L'[q] = L[q] - atom * L'[q - p];
            // iterate along the shift so updated values feed forward.
            if (p == 1) {
                for (int q = lo; q <= hi; ++q)
                    if (q - p >= lo && q - p <= hi)
                        at(q) -= f.atom.mul_truncated(at(q - p), mask, cutoff, &dropped);
            } else {
                for (int q = hi; q >= lo; --q)
                    if (q - p >= lo && q - p <= hi)
                        at(q) -= f.atom.mul_truncated(at(q - p), mask, cutoff, &dropped);
            }
        }
    }

    Series r(at(target), cutoff, mask);
    if (dropped) r.exact = false;
    return r;
}

}  // namespace gcp
