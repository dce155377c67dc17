#pragma once

#include <vector>

#include "gcp/poly.hpp"
#include "gcp/series.hpp"

namespace gcp {

// Determinant by minor expansion over column subsets: O(n 2^n) ring
// multiplications, no division. This is the only valid route for Series
// matrices (the truncation ring has zero divisors, so fraction-free
// elimination does not apply).
template <class Ring>
Ring subset_minor_det(const std::vector<std::vector<Ring>>& a, Ring zero, Ring one) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return one;
    std::vector<Ring> f(size_t{1} << n, zero);
    f[0] = one;
    // Enumerate subsets in increasing popcount by plain increasing order:
    // every subset's predecessors (one element removed) are smaller numbers.
    for (size_t s = 1; s < f.size(); ++s) {
        int row = __builtin_popcountll(s) - 1;
        Ring acc = zero;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(s >> j & 1)) continue;
            Ring contrib = a[row][j] * f[s ^ (size_t{1} << j)];
            // Laplace sign along the last row: (-1)^{row + position in s}.
            if ((row + pos) % 2 == 0)
                acc += contrib;
            else
                acc -= contrib;
            ++pos;
        }
        f[s] = std::move(acc);
    }
    return f.back();
}

Poly poly_det(std::vector<std::vector<Poly>> a);
// cutoff/mask identify the ring (also needed for the empty matrix, det = 1).
Series series_det(const std::vector<std::vector<Series>>& a, int cutoff,
                  uint32_t mask = kMaskParams);

}  // namespace gcp
