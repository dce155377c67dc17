#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gcp {

// Variable families. The packed key orders families x < y < alpha < beta <
// aux, and within a family by index; that single order drives the canonical
// term order everywhere (printing, leading terms, JSON).
enum class Fam : uint8_t { x = 0, y = 1, alpha = 2, beta = 3, aux = 4 };

using VarKey = uint32_t;

constexpr VarKey var_key(Fam f, int index) {
    return (static_cast<VarKey>(f) << 24) | static_cast<VarKey>(index);
}
constexpr Fam key_family(VarKey k) { return static_cast<Fam>(k >> 24); }
constexpr int key_index(VarKey k) { return static_cast<int>(k & 0xffffff); }

std::string var_name(VarKey k, bool unicode = false);

// Monomial: sorted (key, exponent>0) pairs with cached total degree.
struct Mono {
    std::vector<std::pair<VarKey, int>> factors;
    int deg = 0;

    static Mono one() { return {}; }
    static Mono var(VarKey k, int e = 1) {
        Mono m;
        if (e != 0) {
            m.factors = {{k, e}};
            m.deg = e;
        }
        return m;
    }
    bool is_one() const { return factors.empty(); }
    int exponent(VarKey k) const {
        for (auto& [key, e] : factors)
            if (key == k) return e;
        return 0;
    }
    // Degree counting only the families in `mask` (bit i = family i).
    int graded_deg(uint32_t mask) const {
        int d = 0;
        for (auto& [key, e] : factors)
            if (mask >> static_cast<int>(key_family(key)) & 1) d += e;
        return d;
    }
    Mono times(const Mono& o) const;
    bool divides(const Mono& o) const;       // this | o
    Mono divide_into(const Mono& o) const;   // o / this (requires divides)
    bool operator==(const Mono& o) const { return factors == o.factors; }
};

constexpr uint32_t fam_mask(Fam f) { return 1u << static_cast<int>(f); }
constexpr uint32_t kMaskParams = fam_mask(Fam::alpha) | fam_mask(Fam::beta) | fam_mask(Fam::aux);

// Lexicographic comparison where earlier keys are more significant and a
// higher exponent there wins: returns <0, 0, >0 like strcmp.
int lex_cmp(const Mono& a, const Mono& b);

// Graded-lex total order (degree first, then lex). Used as the map order, so
// rbegin() of a Poly is its leading term.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        return lex_cmp(a, b) < 0;
    }
};

// Print order: ascending total degree; within a degree the lex-larger
// monomial comes first ("x1 + x2", "x1^2 + x1*x2 + x2^2").
struct PrintLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        return lex_cmp(a, b) > 0;
    }
};

}  // namespace gcp
