#include "gcp/series.hpp"

namespace gcp {

Series Series::geometric_inverse(const Poly& u, int cut, uint32_t m) {
    for (auto& [mono, c] : u.terms())
        if (mono.graded_deg(m) < 1)
            throw std::domain_error("geometric_inverse needs all terms graded-positive");
    Series r = Series::one(cut, m);
    Series pw = Series::one(cut, m);
    Series mu(-u, cut, m);
    for (int k = 1; k <= cut && !pw.is_zero(); ++k) {
        pw = pw * mu;
        r += pw;
    }
    // The untruncated inverse has terms of every order unless u was zero.
    if (!u.is_zero()) r.exact = false;
    return r;
}

}  // namespace gcp
