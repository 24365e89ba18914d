#pragma once

#include <vector>

#include "lexcount/partition.hpp"

namespace lexcount {

/*
 * A filling of a partition shape by letters from {1..m}. The row lengths
 * always conform to the shape; whether the filling is actually
 * semistandard (rows weakly increasing, columns strictly increasing,
 * letters in range) is checked separately by is_valid_ssyt, so invalid
 * fillings can be represented and rejected.
 */
class SemistandardTableau {
public:
    SemistandardTableau() = default;

    explicit SemistandardTableau(int m) : m_(m) {}

    SemistandardTableau(Partition shape, std::vector<std::vector<int>> rows, int m)
        : shape_(std::move(shape)), rows_(std::move(rows)), m_(m) {
        if (static_cast<int>(rows_.size()) != shape_.length())
            throw std::invalid_argument("tableau row count does not match shape");
        for (int r = 0; r < shape_.length(); ++r)
            if (static_cast<int>(rows_[r].size()) != shape_.parts()[r])
                throw std::invalid_argument("tableau row length does not match shape");
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int alphabet() const { return m_; }
    int weight() const { return shape_.weight(); }

    bool operator==(const SemistandardTableau&) const = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    int m_ = 0;
};

/* Rows weakly increase, columns strictly increase, entries lie in {1..m}. */
bool is_valid_ssyt(const SemistandardTableau& t);

/*
 * Every SSYT of the given shape over {1..m}, exactly once, in row-major
 * lexicographic order on the entries. Empty when the shape has more than
 * m rows.
 */
std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape, int m);

} // namespace lexcount
