#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace lexcount {

/*
 * An integer partition: a weakly decreasing list of positive parts.
 * Trailing zeros are never stored; the empty partition is valid and
 * has weight 0.
 */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        int w = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            w += parts_[i];
        }
        weight_ = w;
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // largest part, 0 for the empty partition
    int first_part() const { return parts_.empty() ? 0 : parts_.front(); }

    // part at 1-based row index, 0 beyond the stored length
    int part(int row) const {
        return (row >= 1 && row <= length()) ? parts_[row - 1] : 0;
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/* Enumeration bounds: at most max_parts parts, each at most max_part. */
struct PartitionBounds {
    int max_parts = 0;
    int max_part = 0;
};

/*
 * All partitions of `weight` fitting the bounds, in reverse-lexicographic
 * order on the part lists (largest first part first). Empty when nothing
 * fits; weight 0 yields just the empty partition.
 */
std::vector<Partition> enumerate_partitions(int weight, PartitionBounds bounds);

/* 0! 1! 2! ... (m-1)! */
mpz_class superfactorial(int m);

/*
 * Number of semistandard Young tableaux of shape `lambda` with entries
 * from {1..m}, by the ratio-of-products dimension formula. Partitions
 * with more than m parts give 0. The division by the superfactorial is
 * exact; a nonzero remainder throws std::logic_error.
 */
mpz_class d_lambda(const Partition& lambda, int m);

} // namespace lexcount
