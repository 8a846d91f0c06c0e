#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "mixmetrics/csv.hpp"
#include "mixmetrics/ingest.hpp"

using namespace mixmetrics;

TEST_CASE("csv round-trips quoted and plain fields") {
    const std::vector<std::string> header = {"senders", "count"};
    const std::vector<std::vector<std::string>> rows = {
        {"1,1,2,3", "420"},
        {"plain", "x\"y"},
        {"1^7", "5040"},
    };
    std::ostringstream out;
    write_csv(out, header, rows);
    std::istringstream in(out.str());
    const auto parsed = parse_csv(in);
    REQUIRE(parsed.size() == 4);
    CHECK(parsed[0] == header);
    CHECK(parsed[1] == rows[0]);
    CHECK(parsed[2] == rows[1]);
    CHECK(parsed[3] == rows[2]);
}

TEST_CASE("csv parse reports unterminated quotes with line numbers") {
    std::istringstream in("a,b\n\"open,1\n");
    CHECK_THROWS_WITH(parse_csv(in), Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("round log worked example") {
    std::istringstream in(
        "round,role,user,count\n"
        "r1,send,A,3\n"
        "r1,send,B,3\n"
        "r1,send,C,2\n"
        "r1,recv,X,5\n"
        "r1,recv,Y,3\n");
    const auto rounds = parse_round_log(in);
    REQUIRE(rounds.size() == 1);
    CHECK(rounds[0].round_id == "r1");
    const TrafficProfile p = profile_from_observation(rounds[0]);
    CHECK(p.senders() == Partition({3, 3, 2}));
    CHECK(p.receivers() == Partition({5, 3}));
}

TEST_CASE("round log accumulates repeated users and preserves round order") {
    std::istringstream in(
        "round,role,user,count\n"
        "r2,send,A,1\n"
        "r1,send,A,2\n"
        "r2,send,A,1\n"
        "r2,recv,X,2\n"
        "r1,recv,X,2\n");
    const auto rounds = parse_round_log(in);
    REQUIRE(rounds.size() == 2);
    CHECK(rounds[0].round_id == "r2");
    CHECK(rounds[0].sends.at("A") == 2);
    CHECK(rounds[1].round_id == "r1");
}

TEST_CASE("empty log yields zero rounds") {
    std::istringstream in("");
    CHECK(parse_round_log(in).empty());
}

TEST_CASE("round log structural errors carry line numbers") {
    std::istringstream bad_header("when,who\nr1,send,A,1\n");
    CHECK_THROWS_WITH(parse_round_log(bad_header),
                      Catch::Matchers::ContainsSubstring("line 1"));

    std::istringstream bad_role("round,role,user,count\nr1,sned,A,1\n");
    CHECK_THROWS_WITH(parse_round_log(bad_role), Catch::Matchers::ContainsSubstring("line 2"));

    std::istringstream bad_count("round,role,user,count\nr1,send,A,0\n");
    CHECK_THROWS_AS(parse_round_log(bad_count), ParseError);

    std::istringstream short_row("round,role,user,count\nr1,send\n");
    CHECK_THROWS_WITH(parse_round_log(short_row),
                      Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("unbalanced rounds surface at profile construction with the round id") {
    std::istringstream in(
        "round,role,user,count\n"
        "r9,send,A,2\n"
        "r9,recv,X,1\n"
        "r9,recv,Y,2\n");
    const auto rounds = parse_round_log(in);
    REQUIRE(rounds.size() == 1);
    CHECK_THROWS_WITH(profile_from_observation(rounds[0]),
                      Catch::Matchers::ContainsSubstring("r9"));
}
