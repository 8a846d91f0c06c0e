#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mixmetrics/bigcount.hpp"
#include "mixmetrics/contingency_table.hpp"
#include "mixmetrics/errors.hpp"
#include "mixmetrics/limits.hpp"
#include "mixmetrics/profile.hpp"

namespace mixmetrics {

namespace detail {

/*
 * Exact assignment counting.
 *
 * The quantity is the number of k x l non-negative integer matrices whose
 * row sums are the sender counts and whose column sums are the receiver
 * counts; equivalently, the coefficient of x1^{s_1}...xk^{s_k} in the
 * product h_{r_1}...h_{r_l} of complete homogeneous symmetric polynomials.
 *
 * Receivers are consumed one at a time. After a prefix of receivers has
 * been filled, the only thing the remaining count depends on is the
 * multiset of remaining sender capacities, so that multiset (plus the
 * receiver index) is the memo key. Capacities are further grouped by
 * value: a receiver taking d messages each from m interchangeable
 * columns of capacity v contributes a single transition weighted by the
 * number of ways to pick those columns, C(free, m) per deduction value,
 * i.e. a multinomial over the group. This keeps profiles like one heavy
 * sender among dozens of singletons polynomial instead of exponential.
 */
class AssignmentDp {
public:
    explicit AssignmentDp(const TrafficProfile& profile)
        : receivers_(profile.receivers().parts()), initial_(profile.senders().parts()) {}

    BigCount run() { return count(0, initial_); }

private:
    // caps is non-increasing and zero-free
    BigCount count(std::size_t idx, std::vector<int> caps) {
        if (idx == receivers_.size()) return 1;
        std::vector<int> key;
        key.reserve(caps.size() + 1);
        key.push_back(static_cast<int>(idx));
        key.insert(key.end(), caps.begin(), caps.end());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<std::pair<int, int>> groups;  // capacity value, column count
        for (int v : caps) {
            if (!groups.empty() && groups.back().first == v)
                ++groups.back().second;
            else
                groups.emplace_back(v, 1);
        }

        BigCount total = 0;
        std::vector<int> next;  // capacities surviving into the next step

        std::function<void(std::size_t, int, const BigCount&)> over_groups =
            [&](std::size_t g, int rem, const BigCount& weight) {
                if (g == groups.size()) {
                    if (rem != 0) return;
                    std::vector<int> sorted = next;
                    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
                    total += weight * count(idx + 1, std::move(sorted));
                    return;
                }
                const int v = groups[g].first;
                const int c = groups[g].second;
                // choose how many of the group's columns give up each
                // amount d; untouched columns keep capacity v
                std::function<void(int, int, int, const BigCount&)> over_deductions =
                    [&](int d, int free, int rem_here, const BigCount& w) {
                        if (d == 0) {
                            next.insert(next.end(), static_cast<std::size_t>(free), v);
                            over_groups(g + 1, rem_here, w);
                            next.resize(next.size() - static_cast<std::size_t>(free));
                            return;
                        }
                        const int m_max = std::min(free, rem_here / d);
                        for (int m = 0; m <= m_max; ++m) {
                            if (v - d > 0)
                                next.insert(next.end(), static_cast<std::size_t>(m), v - d);
                            over_deductions(d - 1, free - m, rem_here - m * d,
                                            m == 0 ? w : w * binomial(free, m));
                            if (v - d > 0)
                                next.resize(next.size() - static_cast<std::size_t>(m));
                        }
                    };
                over_deductions(v, c, rem, weight);
            };
        over_groups(0, receivers_[idx], 1);

        BigCount result = total;
        memo_.emplace(std::move(key), std::move(total));
        return result;
    }

    const std::vector<int>& receivers_;
    std::vector<int> initial_;
    std::map<std::vector<int>, BigCount> memo_;
};

}  // namespace detail

// Number of distinct sender-to-receiver traffic assignments realizing the
// profile. Exact for any size; cost grows with the number of distinct
// capacity multisets, not with the count itself.
inline BigCount count_assignments(const TrafficProfile& profile) {
    return detail::AssignmentDp(profile).run();
}

// Every contingency table of the profile (rows = canonical sender counts,
// columns = canonical receiver counts), each exactly once, in ascending
// row-major lexicographic order. The predicted table count is checked
// against the budget before any table is built.
inline std::vector<ContingencyTable> enumerate_tables(
    const TrafficProfile& profile, std::uint64_t max_tables = kDefaultTableBudget) {
    const BigCount predicted = count_assignments(profile);
    if (predicted > max_tables)
        throw SizeBudgetExceeded("profile has " + predicted.str() + " tables, budget " +
                                 std::to_string(max_tables));

    const std::vector<int>& rows = profile.senders().parts();
    const std::vector<int>& cols = profile.receivers().parts();
    const int k = static_cast<int>(rows.size());
    const int l = static_cast<int>(cols.size());

    std::vector<ContingencyTable> out;
    out.reserve(predicted.convert_to<std::size_t>());
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(k),
                                        std::vector<int>(static_cast<std::size_t>(l), 0));
    std::vector<int> col_rem = cols;
    std::vector<int> col_suffix(static_cast<std::size_t>(l) + 1, 0);

    // Cell (j, i) ranges over [row_rem - capacity right of i, min(row_rem,
    // col_rem[i])]; within those bounds every prefix completes, so the
    // recursion never dead-ends and emits tables in ascending order.
    std::function<void(int, int, int)> fill = [&](int j, int i, int row_rem) {
        if (j == k) {
            out.emplace_back(cells);
            return;
        }
        if (i == l) {
            fill(j + 1, 0, j + 1 < k ? rows[static_cast<std::size_t>(j) + 1] : 0);
            return;
        }
        for (int s = l - 1; s >= i; --s)
            col_suffix[static_cast<std::size_t>(s)] =
                col_suffix[static_cast<std::size_t>(s) + 1] + col_rem[static_cast<std::size_t>(s)];
        const int lo = std::max(0, row_rem - col_suffix[static_cast<std::size_t>(i) + 1]);
        const int hi = std::min(row_rem, col_rem[static_cast<std::size_t>(i)]);
        for (int v = lo; v <= hi; ++v) {
            cells[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
            col_rem[static_cast<std::size_t>(i)] -= v;
            fill(j, i + 1, row_rem - v);
            col_rem[static_cast<std::size_t>(i)] += v;
        }
        cells[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 0;
    };
    fill(0, 0, rows[0]);
    return out;
}

}  // namespace mixmetrics
