#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "mixmetrics/counting.hpp"
#include "mixmetrics/integer_partitions.hpp"
#include "mixmetrics/monomial_poly.hpp"
#include "mixmetrics/oracle.hpp"
#include "mixmetrics/profile.hpp"

using namespace mixmetrics;

namespace {

// Coefficient of x1^{s_1}..x_k^{s_k} in the product of h_{r_i} over k
// variables: the literal generating-function route.
BigCount expansion_coefficient(const TrafficProfile& p) {
    const int k = p.senders().size();
    MonomialPoly prod = MonomialPoly::one(k);
    for (int r : p.receivers().parts()) prod = poly_multiply(prod, homogeneous(r, k));
    std::vector<int> target = p.senders().parts();
    return prod.coefficient(target);
}

TrafficProfile random_profile(std::mt19937_64& rng, int max_total) {
    std::uniform_int_distribution<int> total_dist(1, max_total);
    const int n = total_dist(rng);
    auto random_partition = [&](int sum) {
        std::vector<int> parts;
        int left = sum;
        while (left > 0) {
            std::uniform_int_distribution<int> part(1, left);
            const int p = part(rng);
            parts.push_back(p);
            left -= p;
        }
        return canonicalize(parts);
    };
    return TrafficProfile(random_partition(n), random_partition(n));
}

}  // namespace

TEST_CASE("homogeneous term counts and contents") {
    const MonomialPoly h3 = homogeneous(3, 3);
    CHECK(h3.term_count() == 10);
    CHECK(h3.coefficient({3, 0, 0}) == 1);
    CHECK(h3.coefficient({2, 1, 0}) == 1);
    CHECK(h3.coefficient({1, 1, 1}) == 1);
    CHECK(h3.coefficient({4, 0, 0}) == 0);

    CHECK(homogeneous(5, 3).term_count() == 21);
    const MonomialPoly h0 = homogeneous(0, 4);
    CHECK(h0.term_count() == 1);
    CHECK(h0.coefficient({0, 0, 0, 0}) == 1);
}

TEST_CASE("homogeneous term count formula across sizes") {
    for (int m = 0; m <= 6; ++m)
        for (int k = 1; k <= 5; ++k) {
            const MonomialPoly h = homogeneous(m, k);
            CHECK(BigCount(h.term_count()) == binomial(m + k - 1, k - 1));
            for (const auto& [exps, coeff] : h.terms()) CHECK(coeff == 1);
        }
}

TEST_CASE("homogeneous respects the term budget") {
    // C(59, 9) is far past a thousand terms
    CHECK_THROWS_AS(homogeneous(50, 10, 1000), SizeBudgetExceeded);
}

TEST_CASE("poly_multiply basics") {
    const MonomialPoly h1 = homogeneous(1, 2);
    const MonomialPoly sq = poly_multiply(h1, h1);
    CHECK(sq.term_count() == 3);
    CHECK(sq.coefficient({2, 0}) == 1);
    CHECK(sq.coefficient({1, 1}) == 2);
    CHECK(sq.coefficient({0, 2}) == 1);

    const MonomialPoly p = homogeneous(3, 3);
    const MonomialPoly same = poly_multiply(MonomialPoly::one(3), p);
    CHECK(same.terms() == p.terms());

    CHECK_THROWS_AS(poly_multiply(homogeneous(1, 2), homogeneous(1, 3)),
                    VariableCountMismatch);
}

TEST_CASE("worked coefficient: h5 * h3 at x1^3 x2^3 x3^2") {
    const MonomialPoly prod = poly_multiply(homogeneous(5, 3), homogeneous(3, 3));
    CHECK(prod.coefficient({3, 3, 2}) == 9);
}

TEST_CASE("count_assignments pinned examples") {
    CHECK(count_assignments(TrafficProfile(Partition({3, 3, 2}), Partition({5, 3}))) == 9);
    CHECK(count_assignments(TrafficProfile(Partition::singletons(7), Partition::singletons(7))) ==
          5040);
    CHECK(count_assignments(TrafficProfile(Partition({2, 2, 3}), Partition({2, 5}))) == 6);
    CHECK(count_assignments(TrafficProfile(Partition({9}), Partition({2, 3, 4}))) == 1);
    std::vector<int> two_heavy = {2, 1, 1, 1, 1, 1, 1};
    CHECK(count_assignments(TrafficProfile(canonicalize(two_heavy), canonicalize(two_heavy))) ==
          10440);
}

TEST_CASE("count is symmetric in senders and receivers") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 300; ++trial) {
        const TrafficProfile p = random_profile(rng, 20);
        const TrafficProfile swapped(p.receivers(), p.senders());
        CHECK(count_assignments(p) == count_assignments(swapped));
    }
}

TEST_CASE("expansion agreement: engine equals the generating-function route") {
    // every profile with n <= 8 and at most 4 senders
    for (int n = 1; n <= 8; ++n) {
        for (const Partition& s : partitions_of(n)) {
            if (s.size() > 4) continue;
            for (const Partition& r : partitions_of(n)) {
                const TrafficProfile p(s, r);
                CHECK(count_assignments(p) == expansion_coefficient(p));
            }
        }
    }
}

TEST_CASE("engine equals brute force on every small profile") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& s : partitions_of(n))
            for (const Partition& r : partitions_of(n)) {
                const TrafficProfile p(s, r);
                CHECK(count_assignments(p) == brute_force_count(p));
            }
}

TEST_CASE("enumeration agreement: table count equals the assignment count") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const TrafficProfile p = random_profile(rng, 9);
        CHECK(BigCount(enumerate_tables(p).size()) == count_assignments(p));
    }
}

TEST_CASE("all-singletons profile counts n!") {
    for (int n = 1; n <= 12; ++n)
        CHECK(count_assignments(TrafficProfile(Partition::singletons(n),
                                               Partition::singletons(n))) == factorial(n));
}

TEST_CASE("multinomial law against singleton receivers") {
    std::mt19937_64 rng(7337);
    for (int trial = 0; trial < 200; ++trial) {
        const TrafficProfile p = random_profile(rng, 15);
        const TrafficProfile vs_singles(p.senders(), Partition::singletons(p.n()));
        CHECK(count_assignments(vs_singles) == multinomial(p.n(), p.senders().parts()));
    }
}

TEST_CASE("coalescing rule: merging a 1 into a k divides the count by k+1") {
    // senders (1, k, rest) vs (k+1, rest) against singleton receivers
    std::mt19937_64 rng(2025);
    std::uniform_int_distribution<int> kd(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = kd(rng);
        std::vector<int> rest;
        std::uniform_int_distribution<int> extra(0, 3), val(1, 4);
        const int extras = extra(rng);
        for (int i = 0; i < extras; ++i) rest.push_back(val(rng));
        std::vector<int> with_split = rest;
        with_split.push_back(1);
        with_split.push_back(k);
        std::vector<int> with_merged = rest;
        with_merged.push_back(k + 1);
        const int n = k + 1 + std::accumulate(rest.begin(), rest.end(), 0);
        const BigCount split = count_assignments(
            TrafficProfile(canonicalize(with_split), Partition::singletons(n)));
        const BigCount merged = count_assignments(
            TrafficProfile(canonicalize(with_merged), Partition::singletons(n)));
        CHECK(split == merged * (k + 1));
    }
}

TEST_CASE("count bounds: between 1 and n!") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const TrafficProfile p = random_profile(rng, 18);
        const BigCount c = count_assignments(p);
        CHECK(c >= 1);
        CHECK(c <= factorial(p.n()));
    }
}

TEST_CASE("enumerate_tables pinned cases") {
    const auto five = enumerate_tables(TrafficProfile(Partition({2, 3}), Partition({2, 2, 1})));
    CHECK(five.size() == 5);
    const auto nine = enumerate_tables(TrafficProfile(Partition({3, 3, 2}), Partition({5, 3})));
    CHECK(nine.size() == 9);
    const auto one = enumerate_tables(TrafficProfile(Partition({4}), Partition({4})));
    REQUIRE(one.size() == 1);
    CHECK(one[0].entries() == std::vector<std::vector<int>>{{4}});
}

TEST_CASE("enumerate_tables margins, uniqueness, and ascending order") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        const TrafficProfile p = random_profile(rng, 9);
        const auto tables = enumerate_tables(p);
        std::set<std::vector<std::vector<int>>> seen;
        for (std::size_t t = 0; t < tables.size(); ++t) {
            CHECK(tables[t].row_sums() == p.senders().parts());
            CHECK(tables[t].col_sums() == p.receivers().parts());
            CHECK(seen.insert(tables[t].entries()).second);
            if (t > 0) CHECK(tables[t - 1] < tables[t]);
        }
    }
}

TEST_CASE("enumerate_tables honors the budget") {
    CHECK_THROWS_AS(enumerate_tables(TrafficProfile(Partition::singletons(10),
                                                    Partition::singletons(10)),
                                     1000),
                    SizeBudgetExceeded);
}
