#pragma once

#include <stdexcept>

#include "gcp/poly.hpp"

namespace gcp {

// Element of the truncation ring: a Poly kept modulo terms whose graded
// degree (by default in the deformation parameters alpha/beta plus aux)
// exceeds `cutoff`. `exact` certifies that no term was ever discarded on any
// path into this value, i.e. the body equals the untruncated object.
//
// This ring has zero divisors, so nothing here may use division-based matrix
// algorithms; see series_det in matrix.hpp.
struct Series {
    Poly body;
    int cutoff = 0;
    uint32_t mask = kMaskParams;
    bool exact = true;

    Series() = default;
    Series(Poly b, int cut, uint32_t m = kMaskParams, bool ex = true)
        : cutoff(cut), mask(m), exact(ex) {
        bool dropped = false;
        body = b.truncated(mask, cutoff, &dropped);
        if (dropped) exact = false;
    }
    static Series zero(int cut, uint32_t m = kMaskParams) { return Series(Poly{}, cut, m); }
    static Series one(int cut, uint32_t m = kMaskParams) { return Series(Poly{Int(1)}, cut, m); }

    bool is_zero() const { return body.is_zero(); }

    Series& operator+=(const Series& o) {
        check_compatible(o);
        body += o.body;
        exact = exact && o.exact;
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_compatible(o);
        body -= o.body;
        exact = exact && o.exact;
        return *this;
    }
    Series operator+(const Series& o) const { Series r = *this; r += o; return r; }
    Series operator-(const Series& o) const { Series r = *this; r -= o; return r; }
    Series operator-() const { Series r = *this; r.body = -r.body; return r; }

    Series operator*(const Series& o) const {
        check_compatible(o);
        bool dropped = false;
        Poly b = body.mul_truncated(o.body, mask, cutoff, &dropped);
        Series r;
        r.body = std::move(b);
        r.cutoff = cutoff;
        r.mask = mask;
        r.exact = exact && o.exact && !dropped;
        return r;
    }
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }

    Series times_poly(const Poly& p) const {
        bool dropped = false;
        Series r = *this;
        r.body = body.mul_truncated(p, mask, cutoff, &dropped);
        if (dropped) r.exact = false;
        return r;
    }
    Series& scale(const Int& c) {
        body.scale(c);
        return *this;
    }
    Series divide_by_int(const Int& c) const {
        Series r = *this;
        r.body = body.divide_by_int(c);
        return r;
    }

    // Inverse of 1 + u where every term of u has positive graded degree
    // (Neumann series; terminates at the cutoff by the grading assumption).
    static Series geometric_inverse(const Poly& u, int cut, uint32_t m = kMaskParams);

    bool operator==(const Series& o) const { return body == o.body; }

private:
    void check_compatible(const Series& o) const {
        if (mask != o.mask || cutoff != o.cutoff)
            throw std::logic_error("mixing truncation rings (mask/cutoff mismatch)");
    }
};

// Equality of two series bodies after re-truncating both to `cutoff`.
inline bool equal_truncated(const Poly& a, const Poly& b, uint32_t mask, int cutoff) {
    return a.truncated(mask, cutoff) == b.truncated(mask, cutoff);
}

}  // namespace gcp
