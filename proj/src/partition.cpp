#include "gcp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gcp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    size_t i = 0;
    auto fail = [&](const std::string& why) {
        std::ostringstream os;
        os << "bad partition '" << text << "' at position " << i << ": " << why;
        throw std::invalid_argument(os.str());
    };
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
        if (i == text.size()) break;
        if (!isdigit(static_cast<unsigned char>(text[i]))) fail("expected digit");
        int v = 0;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000) fail("part too large");
            ++i;
        }
        parts.push_back(v);
    }
    try {
        return Partition(parts);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return Partition{};  // unreachable
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(parts_[0], 0);
    for (int col = 1; col <= parts_[0]; ++col)
        for (int row = 0; row < length(); ++row)
            if (parts_[row] >= col) ++c[col - 1];
    return Partition(c);
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

Partition Partition::intersect(const Partition& a, const Partition& b) {
    std::vector<int> c;
    for (int i = 1; i <= std::min(a.length(), b.length()); ++i)
        c.push_back(std::min(a.part(i), b.part(i)));
    return Partition(c);
}

std::vector<std::pair<int, int>> Partition::corners() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= length(); ++i)
        if (part(i) > part(i + 1)) out.emplace_back(i, part(i));
    return out;
}

std::vector<Partition> Partition::corner_removals() const {
    auto cs = corners();
    std::vector<Partition> out;
    for (size_t mask = 0; mask < (size_t{1} << cs.size()); ++mask) {
        std::vector<int> p(parts_);
        for (size_t t = 0; t < cs.size(); ++t)
            if (mask >> t & 1) --p[cs[t].first - 1];
        out.push_back(Partition(p));
    }
    return out;
}

std::vector<std::pair<int, int>> Partition::cells_minus(const Partition& inner) const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= length(); ++i)
        for (int j = inner.part(i) + 1; j <= part(i); ++j)
            out.emplace_back(i, j);
    return out;
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::set<Partition> acc;
    std::vector<int> cur;
    // Depth-first over weakly decreasing rows bounded by cols.
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        acc.insert(Partition(cur));
        if (row >= rows) return;
        for (int v = 1; v <= maxpart; ++v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, cols);
    return {acc.begin(), acc.end()};
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::set<Partition> acc;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        acc.insert(Partition(cur));
        if (row >= lambda.length()) return;
        for (int v = 1; v <= std::min(maxpart, lambda.part(row + 1)); ++v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, lambda.part(1));
    return {acc.begin(), acc.end()};
}

}  // namespace gcp
