#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mixmetrics/bigcount.hpp"
#include "mixmetrics/errors.hpp"
#include "mixmetrics/limits.hpp"
#include "mixmetrics/partition.hpp"
#include "mixmetrics/profile.hpp"

namespace mixmetrics {

// Number of partitions of n, exact. Used for budget prechecks.
inline BigCount partition_count(int n) {
    if (n < 0) return 0;
    // p(i, j) = partitions of i with parts <= j, built column by column
    std::vector<BigCount> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int i = part; i <= n; ++i) p[i] += p[i - part];
    return p[static_cast<std::size_t>(n)];
}

namespace detail {

inline void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                            std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        prefix.push_back(first);
        emit_partitions(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

// All partitions of n in reverse-lexicographic order: (n) first, the
// all-singletons partition last. For n = 3: (3), (2,1), (1,1,1).
inline std::vector<Partition> partitions_of(
    int n, std::uint64_t max_partitions = kDefaultPartitionBudget) {
    if (n < 1) throw NonPositiveEntry("partitions of " + std::to_string(n));
    const BigCount total = partition_count(n);
    if (total > max_partitions)
        throw SizeBudgetExceeded("p(" + std::to_string(n) + ") = " + total.str() +
                                 " exceeds partition budget " + std::to_string(max_partitions));
    std::vector<Partition> out;
    out.reserve(total.convert_to<std::size_t>());
    std::vector<int> prefix;
    detail::emit_partitions(n, n, prefix, out);
    return out;
}

// Partitions of n ordered the way the reference tables rank profiles:
// by the count they induce against all-singleton receivers, largest
// first. That count is the multinomial n!/(prod parts!), so singletons
// lead and (n) comes last; ties break toward the lexicographically
// larger canonical form, e.g. (4,1,1,1) before (3,2,2) at n = 7.
inline std::vector<Partition> partitions_in_ranking_order(
    int n, std::uint64_t max_partitions = kDefaultPartitionBudget) {
    std::vector<Partition> ps = partitions_of(n, max_partitions);
    std::vector<std::pair<BigCount, std::size_t>> keyed;
    keyed.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        keyed.emplace_back(multinomial(n, ps[i].parts()), i);
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return ps[a.second] > ps[b.second];
    });
    std::vector<Partition> out;
    out.reserve(ps.size());
    for (const auto& [key, idx] : keyed) out.push_back(ps[idx]);
    return out;
}

// Every unordered pair of partitions of n, exactly once, as profiles.
// Pairs walk the upper triangle of the ranking order row-major, so for
// n = 2: (1,1);(1,1), (1,1);(2), (2);(2). Swapping senders and receivers
// never changes a count, so one representative per pair suffices.
inline std::vector<TrafficProfile> profile_pairs(
    int n, std::uint64_t max_pairs = kDefaultPartitionBudget) {
    const BigCount p = partition_count(n);
    const BigCount total = p * (p + 1) / 2;
    if (total > max_pairs)
        throw SizeBudgetExceeded("partition pairs for n = " + std::to_string(n) + ": " +
                                 total.str() + " exceeds budget " + std::to_string(max_pairs));
    std::vector<Partition> ps = partitions_in_ranking_order(n, max_pairs);
    std::vector<TrafficProfile> out;
    out.reserve(total.convert_to<std::size_t>());
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i; j < ps.size(); ++j) out.emplace_back(ps[i], ps[j]);
    return out;
}

}  // namespace mixmetrics
