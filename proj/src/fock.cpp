#include "gcp/fock.hpp"

#include <stdexcept>

namespace gcp {

namespace {

void check_same_space(const FockVector& a, const FockVector& b) {
    if (a.lo != b.lo || a.hi != b.hi || a.cutoff != b.cutoff || a.mask != b.mask)
        throw std::logic_error("mixing fock vectors from different windows or rings");
}

FockVector like(const FockVector& v) {
    FockVector r;
    r.lo = v.lo;
    r.hi = v.hi;
    r.cutoff = v.cutoff;
    r.mask = v.mask;
    r.exact = v.exact;
    return r;
}

int popcount_between(uint64_t key, int lo, int a, int b) {
    // occupied modes strictly between a and b (a < b), window offsets
    uint64_t upper = (a - lo + 1 >= 64) ? 0 : key >> (a - lo + 1);
    int width = b - a - 1;
    uint64_t mask = width >= 64 ? ~uint64_t{0} : ((uint64_t{1} << width) - 1);
    return __builtin_popcountll(upper & mask);
}

int popcount_above(uint64_t key, int lo, int mode) {
    int shift = mode - lo + 1;
    return shift >= 64 ? 0 : __builtin_popcountll(key >> shift);
}

}  // namespace

void FockVector::add(uint64_t key, const Series& s) {
    if (s.is_zero() && s.exact) return;
    auto it = amps.find(key);
    if (it == amps.end()) {
        amps.emplace(key, s);
    } else {
        it->second += s;
        if (it->second.is_zero() && it->second.exact) amps.erase(it);
    }
}

Series& FockVector::at(uint64_t key) {
    auto it = amps.find(key);
    if (it == amps.end())
        it = amps.emplace(key, Series::zero(cutoff, mask)).first;
    return it->second;
}

int FockVector::charge_of(uint64_t key) const {
    int c = 0;
    for (int m = std::max(lo, 0); m < hi; ++m)
        if (key >> (m - lo) & 1) ++c;
    for (int m = lo; m < std::min(hi, 0); ++m)
        if (!(key >> (m - lo) & 1)) --c;
    return c;
}

FockVector vacuum_state(int charge, int lo, int hi, int cutoff, uint32_t mask) {
    return basis_state(Partition{}, charge, lo, hi, cutoff, mask);
}

FockVector basis_state(const Partition& la, int charge, int lo, int hi,
                       int cutoff, uint32_t mask) {
    if (hi - lo > 64) throw std::invalid_argument("mode window wider than 64");
    if (hi < lo) throw std::invalid_argument("empty mode window");
    FockVector v;
    v.lo = lo;
    v.hi = hi;
    v.cutoff = cutoff;
    v.mask = mask;
    uint64_t key = 0;
    // occupied modes la_i - i + charge; the tail charge - i (i large) must
    // leave the window downward, and every mode must fit below hi.
    for (int i = 1;; ++i) {
        int m = la.part(i) - i + charge;
        if (m >= hi) throw std::invalid_argument("state does not fit the window (top)");
        if (m < lo) {
            if (i <= la.length())
                throw std::invalid_argument("state does not fit the window (bottom)");
            break;
        }
        key |= uint64_t{1} << (m - lo);
    }
    v.amps.emplace(key, Series::one(cutoff, mask));
    return v;
}

FockVector apply_psi(const FockVector& v, int k) {
    if (k >= v.hi) throw std::runtime_error("psi above the mode window");
    FockVector r = like(v);
    if (k < v.lo) return r;  // the sea is full there
    uint64_t bit = uint64_t{1} << (k - v.lo);
    for (auto& [key, amp] : v.amps) {
        if (key & bit) continue;
        Series s = amp;
        if (popcount_above(key, v.lo, k) % 2) s.body = -s.body;
        r.add(key | bit, s);
    }
    return r;
}

FockVector apply_psi_star(const FockVector& v, int k) {
    if (k < v.lo) throw std::runtime_error("psi* below the mode window");
    FockVector r = like(v);
    if (k >= v.hi) return r;  // surely empty up there
    uint64_t bit = uint64_t{1} << (k - v.lo);
    for (auto& [key, amp] : v.amps) {
        if (!(key & bit)) continue;
        Series s = amp;
        if (popcount_above(key, v.lo, k) % 2) s.body = -s.body;
        r.add(key & ~bit, s);
    }
    return r;
}

FockVector apply_current(const FockVector& v, int m) {
    FockVector r = like(v);
    if (m == 0) {
        for (auto& [key, amp] : v.amps) {
            Series s = amp;
            s.scale(Int(v.charge_of(key)));
            r.add(key, s);
        }
        return r;
    }
    if (m > 0) {
        // move every particle down by m; targets in the sea vanish
        for (auto& [key, amp] : v.amps) {
            for (int p = v.lo; p < v.hi; ++p) {
                if (!(key >> (p - v.lo) & 1)) continue;
                int q = p - m;
                if (q < v.lo) continue;
                if (key >> (q - v.lo) & 1) continue;
                uint64_t nk = (key & ~(uint64_t{1} << (p - v.lo))) | uint64_t{1} << (q - v.lo);
                Series s = amp;
                if (popcount_between(key, v.lo, q, p) % 2) s.body = -s.body;
                r.add(nk, s);
            }
        }
        return r;
    }
    const int up = -m;
    for (auto& [key, amp] : v.amps) {
        // edge crossings on a zero (poison) amplitude lose only the drop
        // marker, so they demote to inexactness instead of an error
        const bool poison = amp.is_zero();
        // a sea particle could surface through a hole near the floor
        bool floor_hole = false;
        for (int h = v.lo; h < std::min(v.lo + up, v.hi); ++h)
            if (!(key >> (h - v.lo) & 1)) { floor_hole = true; break; }
        if (floor_hole) {
            if (poison) { r.exact = false; continue; }
            throw std::runtime_error("window underflow: raising across the sea floor");
        }
        for (int p = v.lo; p < v.hi; ++p) {
            if (!(key >> (p - v.lo) & 1)) continue;
            int q = p + up;
            if (q >= v.hi) {
                if (poison) { r.exact = false; continue; }
                throw std::runtime_error("window overflow while raising");
            }
            if (key >> (q - v.lo) & 1) continue;
            uint64_t nk = (key & ~(uint64_t{1} << (p - v.lo))) | uint64_t{1} << (q - v.lo);
            Series s = amp;
            if (popcount_between(key, v.lo, p, q) % 2) s.body = -s.body;
            r.add(nk, s);
        }
    }
    return r;
}

FockVector apply_psi_sum(const FockVector& v,
                         const std::vector<std::pair<int, Poly>>& coeffs,
                         bool star) {
    FockVector r = like(v);
    for (auto& [t, c] : coeffs) {
        if (c.is_zero()) continue;
        if (!star && t < v.lo) continue;   // silent sea hit
        if (star && t >= v.hi) continue;   // silently empty
        FockVector w = star ? apply_psi_star(v, t) : apply_psi(v, t);
        for (auto& [key, amp] : w.amps) r.add(key, amp.times_poly(c));
    }
    return r;
}

FockVector exp_currents(const FockVector& v, const std::function<Poly(int)>& pk,
                        bool raising) {
    if (v.amps.empty()) return v;
    FockVector result = v;
    std::vector<FockVector> hhat = {v};  // hhat[i] holds i! times the weight-i piece
    Int factorial = 1;
    const int kMaxWeight = 4096;
    for (int m = 1;; ++m) {
        if (m > kMaxWeight)
            throw std::runtime_error("current exponential did not terminate");
        FockVector acc = like(v);
        Int coef = 1;  // (m-1)! / (m-k)!
        for (int k = 1; k <= m; ++k) {
            Poly p = pk(k);
            if (!p.is_zero()) {
                // scale the source before moving so that a term already out of
                // the truncation ring arrives at the window edge as a zero
                // poison amplitude, not a loud overflow
                FockVector src = like(hhat[m - k]);
                for (auto& [key, amp] : hhat[m - k].amps) {
                    Series s = amp.times_poly(p);
                    s.scale(coef);
                    src.add(key, s);
                }
                if (!src.exact) acc.exact = false;
                if (!src.amps.empty()) {
                    FockVector moved = apply_current(src, raising ? -k : k);
                    for (auto& [key, amp] : moved.amps) acc.add(key, amp);
                    if (!moved.exact) acc.exact = false;
                }
            }
            coef *= m - k;
        }
        const bool spent = acc.is_zero();  // nothing left but poison, if that
        factorial *= m;
        for (auto& [key, amp] : acc.amps) result.add(key, amp.divide_by_int(factorial));
        if (!acc.exact) result.exact = false;
        if (spent) break;
        hhat.push_back(std::move(acc));
    }
    return result;
}

FockVector apply_exp_hx(const FockVector& v, int nvars) {
    FockVector r = v;
    for (int j = 1; j <= nvars; ++j) {
        Poly xj = Poly::variable(Fam::x, j);
        r = exp_currents(r, [&xj](int k) { return xj.pow(k); }, false);
    }
    return r;
}

Series dot(const FockVector& w, const FockVector& v) {
    check_same_space(w, v);
    Series r = Series::zero(v.cutoff, v.mask);
    for (auto& [key, amp] : w.amps) {
        auto it = v.amps.find(key);
        if (it != v.amps.end()) r += amp * it->second;
    }
    if (!w.exact || !v.exact) r.exact = false;
    return r;
}

}  // namespace gcp
