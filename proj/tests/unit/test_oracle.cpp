#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "mixmetrics/counting.hpp"
#include "mixmetrics/integer_partitions.hpp"
#include "mixmetrics/metrics.hpp"
#include "mixmetrics/oracle.hpp"

using namespace mixmetrics;

TEST_CASE("brute_force_count pinned examples") {
    CHECK(brute_force_count(TrafficProfile(Partition({3, 3, 2}), Partition({5, 3}))) == 9);
    CHECK(brute_force_count(TrafficProfile(Partition({1, 1}), Partition({1, 1}))) == 2);
    CHECK(brute_force_count(TrafficProfile(Partition({2, 2}), Partition({2, 2}))) == 3);
}

TEST_CASE("brute_force_count size limit") {
    CHECK_THROWS_AS(brute_force_count(TrafficProfile(Partition::singletons(11),
                                                     Partition::singletons(11))),
                    SizeBudgetExceeded);
    CHECK_NOTHROW(brute_force_count(
        TrafficProfile(Partition::singletons(11), Partition::singletons(11)), 11));
}

TEST_CASE("brute_force_classes pinned examples") {
    const auto classes =
        brute_force_classes(TrafficProfile(Partition({2, 3}), Partition({2, 2, 1})));
    REQUIRE(classes.size() == 5);
    std::vector<BigCount> cards;
    BigCount sum = 0;
    for (const auto& [table, card] : classes) {
        cards.push_back(card);
        sum += card;
    }
    CHECK(cards == std::vector<BigCount>{12, 48, 24, 12, 24});
    CHECK(sum == 120);

    const auto pair = brute_force_classes(TrafficProfile(Partition({1, 1}), Partition({1, 1})));
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].second == 1);
    CHECK(pair[1].second == 1);

    const auto lone = brute_force_classes(TrafficProfile(Partition({2}), Partition({2})));
    REQUIRE(lone.size() == 1);
    CHECK(lone[0].second == 2);
}

TEST_CASE("brute_force_classes size limit") {
    CHECK_THROWS_AS(brute_force_classes(TrafficProfile(Partition::singletons(9),
                                                       Partition::singletons(9))),
                    SizeBudgetExceeded);
}

TEST_CASE("oracle classes agree with engine tables and cardinality formula") {
    // all profiles with n <= 6 keep this a second-scale sweep
    for (int n = 1; n <= 6; ++n)
        for (const Partition& s : partitions_of(n))
            for (const Partition& r : partitions_of(n)) {
                const TrafficProfile p(s, r);
                const auto classes = brute_force_classes(p);
                const auto tables = enumerate_tables(p);
                REQUIRE(classes.size() == tables.size());
                BigCount sum = 0;
                for (std::size_t i = 0; i < classes.size(); ++i) {
                    CHECK(classes[i].first == tables[i]);  // same ascending order
                    CHECK(classes[i].second == class_cardinality(tables[i]));
                    sum += classes[i].second;
                }
                CHECK(sum == factorial(n));
            }
}
