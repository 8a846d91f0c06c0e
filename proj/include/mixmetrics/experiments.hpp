#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "mixmetrics/bigcount.hpp"
#include "mixmetrics/counting.hpp"
#include "mixmetrics/errors.hpp"
#include "mixmetrics/integer_partitions.hpp"
#include "mixmetrics/limits.hpp"
#include "mixmetrics/metrics.hpp"
#include "mixmetrics/partition.hpp"
#include "mixmetrics/profile.hpp"
#include "mixmetrics/profile_spec.hpp"

namespace mixmetrics {

inline std::string format_degree(double deg, int precision = 3) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << deg;
    return os.str();
}

// One row of the exhaustive profile table for a given n.
struct TableRow {
    Partition senders;
    Partition receivers;
    BigCount count;
    double deg;
};

// Counts and degrees for every unordered pair of partitions of n, in
// ranking order (the order the reference table for n = 7 uses).
inline std::vector<TableRow> anonymity_table(int n,
                                             std::uint64_t max_pairs = kDefaultPartitionBudget) {
    std::vector<TableRow> rows;
    for (const TrafficProfile& profile : profile_pairs(n, max_pairs)) {
        const BigCount count = count_assignments(profile);
        const double deg = deg_anonymity(count, n);
        rows.push_back(TableRow{profile.senders(), profile.receivers(), count, deg});
    }
    return rows;
}

// A named x,y(,...) series ready for CSV emission.
struct ExperimentTable {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

namespace detail {

// one heavy sender with `a` messages among singletons, all receivers distinct
inline TrafficProfile heavy_sender_profile(int a, int others) {
    std::vector<int> s(static_cast<std::size_t>(others), 1);
    s.push_back(a);
    return TrafficProfile(canonicalize(std::move(s)), Partition::singletons(a + others));
}

}  // namespace detail

// Built-in replication series. Each emits the data behind one figure or
// table of the README; exact values come from the engine, never from
// hard-coded results.
inline ExperimentTable run_experiment(const std::string& name, int precision = 3) {
    ExperimentTable t;
    t.name = name;
    if (name == "fig1") {
        // 15 messages to distinct receivers; one sender's share a grows
        t.header = {"a", "deg"};
        for (int a = 1; a <= 15; ++a) {
            const double deg = deg_anonymity(detail::heavy_sender_profile(a, 15 - a));
            t.rows.push_back({std::to_string(a), format_degree(deg, precision)});
        }
    } else if (name == "fig2") {
        // seven senders, six of them singletons; n grows with a
        t.header = {"a", "deg"};
        for (int a = 1; a <= 13; ++a) {
            const double deg = deg_anonymity(detail::heavy_sender_profile(a, 6));
            t.rows.push_back({std::to_string(a), format_degree(deg, precision)});
        }
    } else if (name == "fig5") {
        // scaling series: n = 9p+1 messages, the heavy share mirrored on
        // both sides
        t.header = {"p", "deg"};
        for (int p = 1; p <= 9; ++p) {
            const int n = 9 * p + 1;
            std::vector<int> side(static_cast<std::size_t>(n - p), 1);
            side.push_back(p);
            TrafficProfile profile(canonicalize(side), canonicalize(side));
            t.rows.push_back({std::to_string(p),
                              format_degree(deg_anonymity(profile), precision)});
        }
    } else if (name == "fig6") {
        // all n = 7 profiles, ranked by degree
        t.header = {"rank", "deg"};
        std::vector<TableRow> rows = anonymity_table(7);
        std::stable_sort(rows.begin(), rows.end(),
                         [](const TableRow& a, const TableRow& b) { return a.deg > b.deg; });
        for (std::size_t i = 0; i < rows.size(); ++i)
            t.rows.push_back({std::to_string(i + 1), format_degree(rows[i].deg, precision)});
    } else if (name == "saturation") {
        // growing one profile part while receivers mirror it; the count
        // stops growing once one sender dominates
        t.header = {"m", "count", "deg"};
        for (int m = 1; m <= 10; ++m) {
            std::vector<int> side(6, 1);
            side.push_back(m);
            TrafficProfile profile(canonicalize(side), canonicalize(side));
            const BigCount count = count_assignments(profile);
            t.rows.push_back({std::to_string(m), count.str(),
                              format_degree(deg_anonymity(count, profile.n()), precision)});
        }
    } else if (name == "ranking") {
        // sender partitions of 7 against distinct receivers, most
        // anonymous first
        t.header = {"senders", "count", "deg"};
        for (const Partition& p : partitions_in_ranking_order(7)) {
            TrafficProfile profile(p, Partition::singletons(7));
            const BigCount count = count_assignments(profile);
            t.rows.push_back({render_partition(p), count.str(),
                              format_degree(deg_anonymity(count, 7), precision)});
        }
    } else {
        throw UnknownExperiment("unknown experiment '" + name +
                                "' (expected fig1|fig2|fig5|fig6|saturation|ranking)");
    }
    return t;
}

}  // namespace mixmetrics
