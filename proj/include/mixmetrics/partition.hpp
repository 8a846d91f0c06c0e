#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "mixmetrics/errors.hpp"

namespace mixmetrics {

// A multiset of positive message counts, kept in canonical non-increasing
// order. Two partitions are equal exactly when they are equal as multisets.
class Partition {
public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw EmptyInput("partition has no parts");
        for (int p : parts_)
            if (p < 1)
                throw NonPositiveEntry("partition part " + std::to_string(p) +
                                       " is not a positive integer");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    // The all-singletons partition (1,1,...,1) of n.
    static Partition singletons(int n) {
        if (n < 1) throw NonPositiveEntry("singletons of " + std::to_string(n));
        return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    }

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }                                  // sum of parts
    int size() const { return static_cast<int>(parts_.size()); }  // number of parts

    bool all_singletons() const { return parts_.front() == 1; }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    // Lexicographic on the canonical form; gives maps a stable key order.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Canonical form of an arbitrary positive count list.
inline Partition canonicalize(std::vector<int> counts) {
    return Partition(std::move(counts));
}

}  // namespace mixmetrics
