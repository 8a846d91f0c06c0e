#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mixmetrics/errors.hpp"
#include "mixmetrics/partition.hpp"

namespace mixmetrics {

// The abstraction all metrics operate on: a round's traffic pattern with
// user identities discarded. Invariant: senders().n() == receivers().n(),
// the round's total message count.
class TrafficProfile {
public:
    TrafficProfile(Partition senders, Partition receivers)
        : senders_(std::move(senders)), receivers_(std::move(receivers)) {
        if (senders_.n() != receivers_.n())
            throw UnbalancedRound("senders total " + std::to_string(senders_.n()) +
                                  " != receivers total " + std::to_string(receivers_.n()));
    }

    const Partition& senders() const { return senders_; }
    const Partition& receivers() const { return receivers_; }
    int n() const { return senders_.n(); }

    friend bool operator==(const TrafficProfile& a, const TrafficProfile& b) {
        return a.senders_ == b.senders_ && a.receivers_ == b.receivers_;
    }

private:
    Partition senders_;
    Partition receivers_;
};

// One observed round, as ingested from a log: per-user send and receive
// counts keyed by user id. Identities survive only until the profile is
// formed.
struct RoundObservation {
    std::string round_id;
    std::map<std::string, int> sends;
    std::map<std::string, int> receives;
};

inline TrafficProfile profile_from_observation(const RoundObservation& obs) {
    if (obs.sends.empty() || obs.receives.empty())
        throw EmptyInput("round " + obs.round_id + " has no senders or no receivers");
    std::vector<int> s, r;
    int sent = 0, received = 0;
    for (const auto& [user, count] : obs.sends) {
        if (count < 1)
            throw NonPositiveEntry("round " + obs.round_id + ": user " + user +
                                   " sends " + std::to_string(count));
        s.push_back(count);
        sent += count;
    }
    for (const auto& [user, count] : obs.receives) {
        if (count < 1)
            throw NonPositiveEntry("round " + obs.round_id + ": user " + user +
                                   " receives " + std::to_string(count));
        r.push_back(count);
        received += count;
    }
    if (sent != received)
        throw UnbalancedRound("round " + obs.round_id + ": " + std::to_string(sent) +
                              " sent vs " + std::to_string(received) + " received");
    return TrafficProfile(canonicalize(std::move(s)), canonicalize(std::move(r)));
}

}  // namespace mixmetrics
