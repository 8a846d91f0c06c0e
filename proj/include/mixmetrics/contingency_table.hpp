#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mixmetrics/errors.hpp"

namespace mixmetrics {

// A traffic split: entry (j, i) is the number of messages sender j routed
// to receiver i. Rows therefore sum to the sender counts and columns to
// the receiver counts of the profile the table belongs to.
class ContingencyTable {
public:
    explicit ContingencyTable(std::vector<std::vector<int>> entries)
        : entries_(std::move(entries)) {
        if (entries_.empty() || entries_.front().empty())
            throw EmptyInput("contingency table has no cells");
        const std::size_t cols = entries_.front().size();
        col_sums_.assign(cols, 0);
        for (const auto& row : entries_) {
            if (row.size() != cols) throw ParseError("contingency table rows differ in length");
            int rs = 0;
            for (std::size_t i = 0; i < cols; ++i) {
                if (row[i] < 0)
                    throw NonPositiveEntry("contingency table cell " + std::to_string(row[i]));
                rs += row[i];
                col_sums_[i] += row[i];
            }
            row_sums_.push_back(rs);
        }
    }

    const std::vector<std::vector<int>>& entries() const { return entries_; }
    const std::vector<int>& row_sums() const { return row_sums_; }
    const std::vector<int>& col_sums() const { return col_sums_; }
    int rows() const { return static_cast<int>(entries_.size()); }
    int cols() const { return static_cast<int>(entries_.front().size()); }

    friend bool operator==(const ContingencyTable& a, const ContingencyTable& b) {
        return a.entries_ == b.entries_;
    }
    // Row-major lexicographic; the enumeration order contract is stated
    // in terms of this comparison.
    friend std::strong_ordering operator<=>(const ContingencyTable& a,
                                            const ContingencyTable& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<std::vector<int>> entries_;
    std::vector<int> row_sums_;
    std::vector<int> col_sums_;
};

}  // namespace mixmetrics
