#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "mixmetrics/errors.hpp"

namespace mixmetrics {

// Exact arbitrary-precision integer used for every count in the library:
// assignment counts, class cardinalities, permanents, factorials. Counts
// grow past 2^64 already at n = 21, so fixed-width integers are never used
// for them.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount factorial(int n) {
    if (n < 0) throw NonPositiveEntry("factorial of negative " + std::to_string(n));
    BigCount r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigCount binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    // multiply before dividing so every intermediate stays integral
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// n! / (parts[0]! * parts[1]! * ...); the parts must sum to n.
inline BigCount multinomial(int n, const std::vector<int>& parts) {
    long long sum = 0;
    for (int p : parts) {
        if (p < 0) throw NonPositiveEntry("multinomial part below zero");
        sum += p;
    }
    if (sum != n)
        throw UnbalancedRound("multinomial parts sum to " + std::to_string(sum) +
                              ", expected " + std::to_string(n));
    BigCount r = factorial(n);
    for (int p : parts) r /= factorial(p);
    return r;
}

// Natural log of a positive BigCount. Values wider than a double's range
// are split: the top bits convert exactly, the discarded low bits shift
// the log by less than 2^-500.
inline double log_of(const BigCount& x) {
    if (x <= 0) throw NonPositiveEntry("log of non-positive count");
    const unsigned bits = boost::multiprecision::msb(x);
    if (bits <= 512) return std::log(x.convert_to<double>());
    const unsigned shift = bits - 512;
    const BigCount top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

}  // namespace mixmetrics
