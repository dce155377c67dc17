#include "gcp/matrix.hpp"

#include <stdexcept>

namespace gcp {

namespace {

// Fraction-free Gaussian elimination (Bareiss). Exact over the polynomial
// ring; every division is guaranteed exact by the algorithm.
Poly bareiss_det(std::vector<std::vector<Poly>>& a) {
    const int n = static_cast<int>(a.size());
    Poly prev{Int(1)};
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Poly{};
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = Poly::exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    Poly det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

}  // namespace

Poly poly_det(std::vector<std::vector<Poly>> a) {
    const int n = static_cast<int>(a.size());
    for (auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant of non-square matrix");
    if (n <= 5) return subset_minor_det(a, Poly{}, Poly{Int(1)});
    return bareiss_det(a);
}

Series series_det(const std::vector<std::vector<Series>>& a, int cutoff, uint32_t mask) {
    const int n = static_cast<int>(a.size());
    for (auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant of non-square matrix");
    return subset_minor_det(a, Series::zero(cutoff, mask), Series::one(cutoff, mask));
}

}  // namespace gcp
