#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixmetrics/bigcount.hpp"
#include "mixmetrics/contingency_table.hpp"
#include "mixmetrics/counting.hpp"
#include "mixmetrics/errors.hpp"
#include "mixmetrics/limits.hpp"
#include "mixmetrics/permanent.hpp"
#include "mixmetrics/profile.hpp"

namespace mixmetrics {

// Combinatorial anonymity degree: log(COUNT) / log(n!), where COUNT is the
// number of assignments and n the round's message total. Base-invariant
// ratio in [0, 1]; a sole message (n = 1) pins it to 0 by convention.
inline double deg_anonymity(const BigCount& count, int n) {
    if (n < 1) throw NonPositiveEntry("degree of a round with n = " + std::to_string(n));
    if (count < 1) throw NonPositiveEntry("degree of a round with zero assignments");
    if (n == 1) return 0.0;
    return log_of(count) / log_of(factorial(n));
}

inline double deg_anonymity(const TrafficProfile& profile) {
    return deg_anonymity(count_assignments(profile), profile.n());
}

// Degree from an explicit compatibility matrix: log(per(A)) / log(n!).
// A zero permanent means no consistent matching exists at all; that is an
// error (NoMatching), not a zero degree.
inline double edman_degree(const CompatibilityMatrix& m, int max_n = kDefaultPermanentLimit) {
    const BigCount per = permanent(m, max_n);
    if (per == 0) throw NoMatching("compatibility matrix admits no perfect matching");
    if (m.size() == 1) return 0.0;
    return log_of(per) / log_of(factorial(m.size()));
}

// Number of message bijections inducing a given contingency table: each
// sender's messages are distributed over the table's row (a multinomial),
// then each receiver's slots are ordered (a factorial per column).
inline BigCount class_cardinality(const ContingencyTable& table) {
    BigCount card = 1;
    const auto& rows = table.entries();
    for (std::size_t j = 0; j < rows.size(); ++j)
        card *= multinomial(table.row_sums()[j], rows[j]);
    for (int c : table.col_sums()) card *= factorial(c);
    return card;
}

// Class-weighted degree: Shannon entropy of the class-size distribution
// {C_p / n!} normalized by log(n!). Computed in log space as
//   (log n! - sum_p exp(log C_p - log n!) * log C_p) / log n!,
// which is exact at both endpoints: all-singleton profiles give 1, a
// single class gives 0.
inline double gierlichs_degree(const TrafficProfile& profile,
                               std::uint64_t max_tables = kDefaultTableBudget) {
    if (profile.n() == 1) return 0.0;
    const double log_nfact = log_of(factorial(profile.n()));
    double weighted = 0.0;
    for (const ContingencyTable& table : enumerate_tables(profile, max_tables)) {
        const double log_card = log_of(class_cardinality(table));
        weighted += std::exp(log_card - log_nfact) * log_card;
    }
    return (log_nfact - weighted) / log_nfact;
}

// Shannon entropy (base 2) of a sender probability distribution; the
// 0 * log 0 terms drop out. Rejects vectors that are not distributions.
inline double sd_entropy(const std::vector<double>& p) {
    if (p.empty()) throw EmptyInput("entropy of an empty distribution");
    double sum = 0.0;
    for (double x : p) {
        if (x < 0.0) throw NotADistribution("negative probability " + std::to_string(x));
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw NotADistribution("probabilities sum to " + std::to_string(sum));
    double h = 0.0;
    for (double x : p)
        if (x > 0.0) h -= x * std::log2(x);
    return h;
}

// Entropy normalized by the best case log2(N) for N candidate users;
// needs at least two users for the normalizer to be positive.
inline double diaz_degree(const std::vector<double>& p) {
    if (p.size() < 2)
        throw DegenerateSystem("normalized entropy needs at least 2 users, got " +
                               std::to_string(p.size()));
    return sd_entropy(p) / std::log2(static_cast<double>(p.size()));
}

// Every metric the library knows how to compute for one round. Optional
// fields are absent when their computation was out of budget for this
// profile; they are never silently zeroed.
struct AnonymityReport {
    int n = 0;
    BigCount count;
    double deg_a = 0.0;
    std::optional<double> edman_deg;
    std::optional<double> gierlichs_deg;
    std::optional<double> sd_entropy;
    std::optional<double> diaz_deg;
};

struct ReportOptions {
    // distribution over senders for the entropy metrics; uniform over the
    // profile's senders when absent
    std::optional<std::vector<double>> sender_distribution;
    std::uint64_t max_tables = kDefaultTableBudget;
    int max_permanent_n = kDefaultPermanentLimit;
};

inline AnonymityReport full_report(const TrafficProfile& profile,
                                   const ReportOptions& options = {}) {
    AnonymityReport report;
    report.n = profile.n();
    report.count = count_assignments(profile);
    report.deg_a = deg_anonymity(report.count, report.n);

    if (report.n <= options.max_permanent_n)
        report.edman_deg = edman_degree(CompatibilityMatrix::complete(report.n),
                                        options.max_permanent_n);
    try {
        report.gierlichs_deg = gierlichs_degree(profile, options.max_tables);
    } catch (const SizeBudgetExceeded&) {
        // left absent: too many classes to enumerate under this budget
    }

    std::vector<double> dist;
    if (options.sender_distribution) {
        dist = *options.sender_distribution;
    } else {
        const int k = profile.senders().size();
        dist.assign(static_cast<std::size_t>(k), 1.0 / static_cast<double>(k));
    }
    report.sd_entropy = sd_entropy(dist);
    if (dist.size() >= 2) report.diaz_deg = diaz_degree(dist);
    return report;
}

}  // namespace mixmetrics
