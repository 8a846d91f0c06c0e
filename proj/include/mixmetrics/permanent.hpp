#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixmetrics/bigcount.hpp"
#include "mixmetrics/errors.hpp"
#include "mixmetrics/limits.hpp"

namespace mixmetrics {

// Square 0-1 matrix recording which sent message may map to which
// received message under the adversary's constraints. Entry (i, j) = 1
// means sent message i could be received message j.
class CompatibilityMatrix {
public:
    explicit CompatibilityMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw EmptyInput("compatibility matrix is empty");
        for (const auto& row : rows_) {
            if (row.size() != rows_.size())
                throw ParseError("compatibility matrix is not square");
            for (int v : row)
                if (v != 0 && v != 1)
                    throw ParseError("compatibility entries must be 0 or 1, got " +
                                     std::to_string(v));
        }
    }

    // All-ones matrix: the unconstrained threshold mix on n messages.
    static CompatibilityMatrix complete(int n) {
        if (n < 1) throw NonPositiveEntry("complete matrix of size " + std::to_string(n));
        return CompatibilityMatrix(std::vector<std::vector<int>>(
            static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1)));
    }

    int size() const { return static_cast<int>(rows_.size()); }
    int at(int i, int j) const {
        return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

private:
    std::vector<std::vector<int>> rows_;
};

// Exact permanent by inclusion-exclusion over column subsets:
//   per(A) = (-1)^n * sum over nonempty S of (-1)^|S| prod_i sum_{j in S} a_ij.
// Subsets are walked in Gray-code order so each step updates the row sums
// by a single column. 2^n subsets, so n is capped.
inline BigCount permanent(const CompatibilityMatrix& m, int max_n = kDefaultPermanentLimit) {
    const int n = m.size();
    if (n > max_n)
        throw SizeBudgetExceeded("permanent limited to n <= " + std::to_string(max_n) +
                                 ", matrix has n = " + std::to_string(n));

    std::vector<int> row_sum(static_cast<std::size_t>(n), 0);
    BigCount acc = 0;
    std::uint64_t gray_prev = 0;
    for (std::uint64_t counter = 1; counter < (std::uint64_t{1} << n); ++counter) {
        const std::uint64_t gray = counter ^ (counter >> 1);
        const std::uint64_t changed = gray ^ gray_prev;
        int j = 0;
        while (!((changed >> j) & 1)) ++j;
        const int delta = (gray >> j) & 1 ? 1 : -1;
        for (int i = 0; i < n; ++i) row_sum[static_cast<std::size_t>(i)] += delta * m.at(i, j);
        gray_prev = gray;

        BigCount prod = 1;
        for (int i = 0; i < n; ++i) {
            prod *= row_sum[static_cast<std::size_t>(i)];
            if (prod == 0) break;
        }
        const int bits = __builtin_popcountll(gray);
        if ((n - bits) % 2 == 0)
            acc += prod;
        else
            acc -= prod;
    }
    return acc;
}

}  // namespace mixmetrics
