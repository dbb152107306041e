#include <doctest.h>

#include <random>
#include <set>

#include "crossway/crossings.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace crossway;

TEST_SUITE("crossings") {

TEST_CASE("side_of") {
    Model m = testing::parse_ok(testing::kSmallModel);
    const TrustBoundary& tb1 = m.boundaries[0];
    CHECK(side_of(m, "P1", tb1) == Side::Inside);
    CHECK(side_of(m, "E1", tb1) == Side::Outside);
    CHECK_THROWS_AS(side_of(m, "Q7", tb1), UnknownIdError);
}

TEST_CASE("fixture groups") {
    Model m = testing::parse_ok(testing::kSmallModel);
    auto r = find_crossings(m);
    CHECK(r.diagnostics.empty());
    REQUIRE(r.groups.size() == 4);
    // labelled first (k), then synthesized in endpoint declaration order
    CHECK(r.groups[0].label == "k");
    CHECK(r.groups[0].flows == std::vector<std::string>{"DF7"});
    CHECK(r.groups[0].boundaries_crossed.empty());
    CHECK(r.groups[1].label == "x1");
    CHECK(r.groups[1].flows == std::vector<std::string>{"DF1"});
    CHECK(r.groups[2].label == "x2");
    CHECK(r.groups[2].flows == std::vector<std::string>{"DF4"});
    CHECK(r.groups[3].label == "x3");
    CHECK(r.groups[3].flows == std::vector<std::string>{"DF3"});
    CHECK(r.groups[3].boundaries_crossed == std::vector<std::string>{"TB1", "TB2"});
    // internal and coarse flows never appear
    for (const auto& g : r.groups) {
        CHECK_FALSE(g.contains_flow("DF2"));
        CHECK_FALSE(g.contains_flow("CF1"));
    }
}

TEST_CASE("no boundaries means no crossings") {
    Model m = testing::parse_ok("model \"m\"\nentity E1 \"u\"\nprocess P1 \"a\"\nflow DF1 E1 -> P1 \"x\"\n");
    CHECK(find_crossings(m).groups.empty());
}

TEST_CASE("shared labels merge endpoint pairs") {
    Model m = testing::parse_ok(R"(model "m"
entity E1 "a"
entity E2 "b"
process P1 "p"
boundary TB1 "t" { P1 }
flow DF1 P1 -> E1 "x" crossing=iv
flow DF2 E2 -> E1 "y" external crossing=iv
flow DF3 E1 -> P1 "z"
)");
    auto r = find_crossings(m);
    REQUIRE(r.groups.size() == 1);
    CHECK(r.groups[0].label == "iv");
    CHECK(r.groups[0].flows == std::vector<std::string>{"DF1", "DF2", "DF3"});
    CHECK(r.groups[0].endpoint_pairs.size() == 2);
    CHECK(r.groups[0].endpoints(m) == std::vector<std::string>{"E1", "E2", "P1"});
}

TEST_CASE("synthesized labels skip names already in use") {
    Model m = testing::parse_ok(R"(model "m"
entity E1 "a"
entity E2 "b"
process P1 "p"
boundary TB1 "t" { P1 }
flow DF1 E1 -> P1 "x"
flow DF2 E2 -> P1 "y" crossing=x1
)");
    auto r = find_crossings(m);
    REQUIRE(r.groups.size() == 2);
    CHECK(r.groups[0].label == "x1");
    CHECK(r.groups[0].flows == std::vector<std::string>{"DF2"});
    CHECK(r.groups[1].label == "x2");
}

TEST_CASE("corpus has the six interaction points") {
    Model m = testing::corpus_model();
    auto r = find_crossings(m);
    CHECK(r.diagnostics.empty());
    REQUIRE(r.groups.size() == 6);
    const std::vector<std::vector<std::string>> flows = {
        {"DF1", "DF2"}, {"DF5", "DF6"}, {"DF13"}, {"DF3", "DF4", "DF14", "DF15"}, {"DF7", "DF8", "DF9"},
        {"DF10", "DF11", "DF12"}};
    const char* labels[] = {"i", "ii", "iii", "iv", "v", "vi"};
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(r.groups[k].label == labels[k]);
        CHECK(r.groups[k].flows == flows[k]);
    }
    CHECK(r.groups[4].boundaries_crossed == std::vector<std::string>{"TB1", "TB2"});
    CHECK(r.groups[0].endpoints(m) == std::vector<std::string>{"E1", "P1"});
    CHECK(r.groups[4].endpoints(m) == std::vector<std::string>{"P2", "P5", "P6"});
}

TEST_CASE("matches brute-force side comparison on random models") {
    std::mt19937 rng(2024);
    for (int k = 0; k < 200; ++k) {
        Model m = oracle::random_model(rng, {.hierarchy = (k % 3 == 0)});
        auto expected = oracle::crossings(m);
        auto got = find_crossings(m);
        CHECK(got.diagnostics.empty());
        REQUIRE(got.groups.size() == expected.size());
        for (const auto& g : got.groups) {
            CAPTURE(g.label);
            REQUIRE(expected.count(g.label));
            const auto& e = expected.at(g.label);
            CHECK(std::set<std::string>(g.flows.begin(), g.flows.end()) == e.flows);
            CHECK(std::set<std::string>(g.boundaries_crossed.begin(), g.boundaries_crossed.end()) == e.boundaries);
        }
    }
}

}
