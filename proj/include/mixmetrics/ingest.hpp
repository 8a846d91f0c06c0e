#pragma once

#include <istream>
#include <string>
#include <vector>

#include "mixmetrics/csv.hpp"
#include "mixmetrics/errors.hpp"
#include "mixmetrics/profile.hpp"
#include "mixmetrics/profile_spec.hpp"

namespace mixmetrics {

// Round-log format: CSV with header  round,role,user,count  where role is
// "send" or "recv" and count is a positive integer. Rows for the same
// round and user accumulate. Rounds come back in first-appearance order.
// An empty stream is a valid log with no rounds.
inline std::vector<RoundObservation> parse_round_log(std::istream& is) {
    const std::vector<std::vector<std::string>> records = parse_csv(is);
    if (records.empty()) return {};

    const std::vector<std::string> expected = {"round", "role", "user", "count"};
    if (records.front() != expected)
        throw ParseError("line 1: expected header 'round,role,user,count'");

    std::vector<RoundObservation> rounds;
    std::vector<std::string> order;
    auto round_for = [&](const std::string& id) -> RoundObservation& {
        for (std::size_t i = 0; i < order.size(); ++i)
            if (order[i] == id) return rounds[i];
        order.push_back(id);
        rounds.push_back(RoundObservation{id, {}, {}});
        return rounds.back();
    };

    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        const std::string where = "line " + std::to_string(r + 1);
        if (rec.size() != 4)
            throw ParseError(where + ": expected 4 fields, got " + std::to_string(rec.size()));
        const std::string& id = rec[0];
        const std::string& role = rec[1];
        const std::string& user = rec[2];
        if (id.empty()) throw ParseError(where + ": empty round id");
        if (user.empty()) throw ParseError(where + ": empty user id");
        int count = 0;
        try {
            count = detail::parse_positive_int(rec[3], "count");
        } catch (const Error& e) {
            throw ParseError(where + ": " + e.what());
        }
        RoundObservation& round = round_for(id);
        if (role == "send")
            round.sends[user] += count;
        else if (role == "recv")
            round.receives[user] += count;
        else
            throw ParseError(where + ": role must be send or recv, got '" + role + "'");
    }
    return rounds;
}

}  // namespace mixmetrics
