#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcp/monomial.hpp"

namespace gcp {

using Int = boost::multiprecision::cpp_int;

// Exact sparse multivariate polynomial over arbitrary-precision integers.
// Invariant: no zero coefficients stored.
class Poly {
public:
    using Terms = std::map<Mono, Int, GrlexLess>;

    Poly() = default;
    explicit Poly(Int c) {
        if (c != 0) terms_[Mono::one()] = std::move(c);
    }
    explicit Poly(long c) : Poly(Int(c)) {}
    static Poly variable(VarKey k) { return monomial(Mono::var(k), 1); }
    static Poly variable(Fam f, int index) { return variable(var_key(f, index)); }
    static Poly monomial(Mono m, Int c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.deg; }
    int graded_degree(uint32_t mask) const;  // max over terms; -1 for 0
    // Degree in the variables of one family (max over terms).
    int family_degree(Fam f) const { return graded_degree(fam_mask(f)); }

    const Int* coeff(const Mono& m) const;
    Int constant_term() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
    Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly times_term(const Mono& m, const Int& c) const;
    Poly& scale(const Int& c);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Product keeping only terms whose graded degree (families in mask) stays
    // <= cutoff. Sets *dropped (never clears it) if anything was discarded,
    // so one flag can accumulate over many calls.
    Poly mul_truncated(const Poly& o, uint32_t mask, int cutoff, bool* dropped = nullptr) const;
    Poly truncated(uint32_t mask, int cutoff, bool* dropped = nullptr) const;

    Poly pow(int e) const;

    // Simultaneous substitution; variables absent from the map are kept.
    Poly substitute(const std::map<VarKey, Poly>& repl) const;
    // Common special case: kill or swap whole families.
    Poly set_family_zero(Fam f) const;
    Poly swap_families(Fam f, Fam g) const;

    // Exact division; throws std::domain_error if the division fails.
    static Poly exact_divide(const Poly& num, const Poly& den);
    Poly divide_by_int(const Int& c) const;  // throws if not exact

    // Leading term in graded-lex order.
    const std::pair<const Mono, Int>& leading() const { return *terms_.rbegin(); }

private:
    Terms terms_;
    void prune(Terms::iterator it) {
        if (it->second == 0) terms_.erase(it);
    }
};

Poly operator*(const Int& c, const Poly& p);

}  // namespace gcp
