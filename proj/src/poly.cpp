#include "gcp/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcp {

std::string var_name(VarKey k, bool unicode) {
    static const char* ascii[] = {"x", "y", "a", "b", "t"};
    static const char* uni[] = {"x", "y", "α", "β", "t"};
    int f = static_cast<int>(key_family(k));
    return std::string(unicode ? uni[f] : ascii[f]) + std::to_string(key_index(k));
}

Mono Mono::times(const Mono& o) const {
    Mono r;
    r.factors.reserve(factors.size() + o.factors.size());
    size_t i = 0, j = 0;
    while (i < factors.size() || j < o.factors.size()) {
        if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first))
            r.factors.push_back(factors[i++]);
        else if (i == factors.size() || o.factors[j].first < factors[i].first)
            r.factors.push_back(o.factors[j++]);
        else {
            r.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
            ++i, ++j;
        }
    }
    r.deg = deg + o.deg;
    return r;
}

bool Mono::divides(const Mono& o) const {
    size_t j = 0;
    for (auto& [k, e] : factors) {
        while (j < o.factors.size() && o.factors[j].first < k) ++j;
        if (j == o.factors.size() || o.factors[j].first != k || o.factors[j].second < e)
            return false;
    }
    return true;
}

Mono Mono::divide_into(const Mono& o) const {
    Mono r;
    size_t i = 0;
    for (auto& [k, e] : o.factors) {
        int sub = 0;
        if (i < factors.size() && factors[i].first == k) sub = factors[i++].second;
        if (e - sub > 0) r.factors.emplace_back(k, e - sub);
    }
    r.deg = o.deg - deg;
    return r;
}

int lex_cmp(const Mono& a, const Mono& b) {
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first == b.factors[j].first) {
            if (a.factors[i].second != b.factors[j].second)
                return a.factors[i].second < b.factors[j].second ? -1 : 1;
            ++i, ++j;
        } else if (a.factors[i].first < b.factors[j].first) {
            return 1;  // a has a positive exponent on a more significant var
        } else {
            return -1;
        }
    }
    if (i < a.factors.size()) return 1;
    if (j < b.factors.size()) return -1;
    return 0;
}

Poly Poly::monomial(Mono m, Int c) {
    Poly p;
    if (c != 0) p.terms_[std::move(m)] = std::move(c);
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

int Poly::graded_degree(uint32_t mask) const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.graded_deg(mask));
    return d;
}

const Int* Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

Int Poly::constant_term() const {
    auto it = terms_.find(Mono::one());
    return it == terms_.end() ? Int(0) : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            prune(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(m, Int(-c));
        if (!fresh) {
            it->second -= c;
            prune(it);
        }
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            auto [it, fresh] = r.terms_.try_emplace(m1.times(m2), 0);
            it->second += c1 * c2;
            r.prune(it);
        }
    return r;
}

Poly Poly::times_term(const Mono& m, const Int& c) const {
    Poly r;
    if (c == 0) return r;
    for (auto& [m1, c1] : terms_) r.terms_.emplace(m1.times(m), c1 * c);
    return r;
}

Poly& Poly::scale(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, co] : terms_) co *= c;
    return *this;
}

Poly Poly::mul_truncated(const Poly& o, uint32_t mask, int cutoff, bool* dropped) const {
    Poly r;
    bool drop = false;
    for (auto& [m1, c1] : terms_) {
        int g1 = m1.graded_deg(mask);
        for (auto& [m2, c2] : o.terms_) {
            if (g1 + m2.graded_deg(mask) > cutoff) {
                drop = true;
                continue;
            }
            auto [it, fresh] = r.terms_.try_emplace(m1.times(m2), 0);
            it->second += c1 * c2;
            r.prune(it);
        }
    }
    if (dropped && drop) *dropped = true;
    return r;
}

Poly Poly::truncated(uint32_t mask, int cutoff, bool* dropped) const {
    Poly r;
    bool drop = false;
    for (auto& [m, c] : terms_) {
        if (m.graded_deg(mask) > cutoff)
            drop = true;
        else
            r.terms_.emplace(m, c);
    }
    if (dropped && drop) *dropped = true;
    return r;
}

Poly Poly::pow(int e) const {
    Poly r{Int(1)};
    Poly base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

Poly Poly::substitute(const std::map<VarKey, Poly>& repl) const {
    Poly out;
    for (auto& [m, c] : terms_) {
        Poly term{c};
        for (auto& [k, e] : m.factors) {
            auto it = repl.find(k);
            Poly base = (it == repl.end()) ? variable(k) : it->second;
            term = term * base.pow(e);
        }
        out += term;
    }
    return out;
}

Poly Poly::set_family_zero(Fam f) const {
    Poly out;
    for (auto& [m, c] : terms_) {
        bool kill = false;
        for (auto& [k, e] : m.factors)
            if (key_family(k) == f) kill = true;
        if (!kill) out.terms_.emplace(m, c);
    }
    return out;
}

Poly Poly::swap_families(Fam f, Fam g) const {
    Poly out;
    for (auto& [m, c] : terms_) {
        Mono nm;
        nm.deg = m.deg;
        nm.factors = m.factors;
        for (auto& [k, e] : nm.factors) {
            if (key_family(k) == f)
                k = var_key(g, key_index(k));
            else if (key_family(k) == g)
                k = var_key(f, key_index(k));
        }
        std::sort(nm.factors.begin(), nm.factors.end());
        out.terms_.emplace(std::move(nm), c);
    }
    return out;
}

Poly Poly::exact_divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly rem = num, quot;
    const auto& [dm, dc] = den.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (!dm.divides(rm) || rc % dc != 0)
            throw std::domain_error("polynomial division is not exact");
        Mono qm = dm.divide_into(rm);
        Int qc = rc / dc;
        quot += Poly::monomial(qm, qc);
        rem -= den.times_term(qm, qc);
    }
    return quot;
}

Poly Poly::divide_by_int(const Int& c) const {
    Poly r = *this;
    for (auto& [m, co] : r.terms_) {
        if (co % c != 0) throw std::domain_error("integer division of coefficients is not exact");
        co /= c;
    }
    return r;
}

Poly operator*(const Int& c, const Poly& p) {
    Poly r = p;
    r.scale(c);
    return r;
}

}  // namespace gcp
