#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gcp {

// Integer partition: weakly decreasing positive parts. The empty partition is
// Partition{}. part(i) is 1-based and returns 0 past the last row, which keeps
// determinant index arithmetic free of bounds checks.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Accepts "", "3,1,1", "3 1 1" and throws std::invalid_argument with the
    // offending position for anything else (including increasing sequences).
    static Partition parse(const std::string& text);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& inner) const;
    static Partition intersect(const Partition& a, const Partition& b);

    // Removable cells (row, col), top row first.
    std::vector<std::pair<int, int>> corners() const;
    // All partitions obtained by deleting a subset of the corners (2^k of
    // them, including *this). Deterministic order: subsets in binary order.
    std::vector<Partition> corner_removals() const;

    // Cells (row, col) present in *this but not in `inner`; meaningful for
    // any inner (no containment assumed).
    std::vector<std::pair<int, int>> cells_minus(const Partition& inner) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;  // "3,1"; empty partition prints ""

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions fitting in a rows x cols box, sorted (deterministic sweeps).
std::vector<Partition> partitions_in_box(int rows, int cols);

// All mu contained in lambda, sorted.
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace gcp
