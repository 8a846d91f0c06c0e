#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mixmetrics/bigcount.hpp"
#include "mixmetrics/contingency_table.hpp"
#include "mixmetrics/errors.hpp"
#include "mixmetrics/limits.hpp"
#include "mixmetrics/profile.hpp"

namespace mixmetrics {

// Ground-truth counters by direct enumeration. These exist to check the
// counting engine, so they deliberately share none of its machinery: no
// memoization, no capacity grouping, no generating functions. Costs are
// exponential, hence the small hard limits.

// Counts assignments by filling each receiver's slots with an ordered
// (non-increasing) choice of sender labels, consuming per-sender
// availability. Each family of per-receiver label multisets is visited
// exactly once, which is precisely one assignment.
inline BigCount brute_force_count(const TrafficProfile& profile,
                                  int max_n = kDefaultBruteForceLimit) {
    if (profile.n() > max_n)
        throw SizeBudgetExceeded("brute-force count limited to n <= " + std::to_string(max_n) +
                                 ", profile has n = " + std::to_string(profile.n()));
    const std::vector<int>& receivers = profile.receivers().parts();
    std::vector<int> avail = profile.senders().parts();
    const int k = static_cast<int>(avail.size());

    BigCount total = 0;
    // fill receiver r's slots left to right with sender labels that never
    // increase within the receiver, then move to the next receiver
    auto fill = [&](auto&& self, std::size_t r, int slot, int max_label) -> void {
        if (r == receivers.size()) {
            ++total;
            return;
        }
        if (slot == receivers[r]) {
            self(self, r + 1, 0, k - 1);
            return;
        }
        for (int label = max_label; label >= 0; --label) {
            if (avail[static_cast<std::size_t>(label)] == 0) continue;
            --avail[static_cast<std::size_t>(label)];
            self(self, r, slot + 1, label);
            ++avail[static_cast<std::size_t>(label)];
        }
    };
    fill(fill, 0, 0, k - 1);
    return total;
}

// Partitions the n! bijections of sent to received messages into classes
// by the contingency table each induces. Returns (table, cardinality)
// pairs in ascending row-major lexicographic table order, the same order
// enumerate_tables uses.
inline std::vector<std::pair<ContingencyTable, BigCount>> brute_force_classes(
    const TrafficProfile& profile, int max_n = kDefaultClassOracleLimit) {
    if (profile.n() > max_n)
        throw SizeBudgetExceeded("class oracle limited to n <= " + std::to_string(max_n) +
                                 ", profile has n = " + std::to_string(profile.n()));
    const int n = profile.n();
    const std::vector<int>& s = profile.senders().parts();
    const std::vector<int>& r = profile.receivers().parts();

    // message p carries its sender's index, slot q its receiver's index
    std::vector<int> sender_of, receiver_of;
    for (std::size_t j = 0; j < s.size(); ++j)
        sender_of.insert(sender_of.end(), static_cast<std::size_t>(s[j]), static_cast<int>(j));
    for (std::size_t i = 0; i < r.size(); ++i)
        receiver_of.insert(receiver_of.end(), static_cast<std::size_t>(r[i]), static_cast<int>(i));

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::vector<std::vector<int>>, BigCount> buckets;
    std::vector<std::vector<int>> cells(s.size(), std::vector<int>(r.size(), 0));
    do {
        for (auto& row : cells) std::fill(row.begin(), row.end(), 0);
        for (int p = 0; p < n; ++p)
            ++cells[static_cast<std::size_t>(sender_of[static_cast<std::size_t>(p)])]
                   [static_cast<std::size_t>(receiver_of[perm[static_cast<std::size_t>(p)]])];
        ++buckets[cells];
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::pair<ContingencyTable, BigCount>> out;
    out.reserve(buckets.size());
    for (auto& [tab, card] : buckets) out.emplace_back(ContingencyTable(tab), card);
    return out;
}

}  // namespace mixmetrics
