#include "gcp/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace gcp {

namespace {

std::vector<const std::pair<const Mono, Int>*> print_sorted(const Poly& p) {
    std::vector<const std::pair<const Mono, Int>*> ts;
    ts.reserve(p.term_count());
    for (auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        return PrintLess{}(a->first, b->first);
    });
    return ts;
}

// Parameter variables print before the main variables ("b1*x1", not "x1*b1").
int print_priority(Fam f) {
    switch (f) {
        case Fam::alpha: return 0;
        case Fam::beta: return 1;
        case Fam::aux: return 2;
        case Fam::x: return 3;
        case Fam::y: return 4;
    }
    return 5;
}

std::string mono_body(const Mono& m, bool unicode) {
    auto fs = m.factors;
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        int pa = print_priority(key_family(a.first));
        int pb = print_priority(key_family(b.first));
        if (pa != pb) return pa < pb;
        return key_index(a.first) < key_index(b.first);
    });
    std::string s;
    for (auto& [k, e] : fs) {
        if (!s.empty()) s += "*";
        s += var_name(k, unicode);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace

std::string to_string(const Poly& p, bool unicode) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto* t : print_sorted(p)) {
        const auto& [m, c] = *t;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << mono_body(m, unicode);
        }
    }
    return os.str();
}

nlohmann::json to_json(const Poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto* t : print_sorted(p)) {
        const auto& [m, c] = *t;
        nlohmann::json exps = nlohmann::json::object();
        for (auto& [k, e] : m.factors) exps[var_name(k)] = e;
        terms.push_back({{"exponents", exps}, {"coeff", c.str()}});
    }
    return {{"terms", terms}};
}

}  // namespace gcp
