#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "crossway/catalog.hpp"
#include "crossway/engine.hpp"
#include "support.hpp"

using namespace crossway;

namespace {

const char* kCatalog = R"(catalog ATTACK
entry T1557 "AiTM" category=CCT stride=S,T
entry T1040 "Sniffing" category=CCT stride=I
entry T1070 "Indicator Removal" category=CCT stride=R
catalog OWASP_LLM
entry LLM06 "Excessive Agency" category=ConT stride=I,E
rule R1 applies entry=T1557 where kind=flow note="flow aitm"
rule R2 applies entry=T1557 where kind=entity note="spoofed peer"
rule R3 applies entry=T1040 where kind=flow direction=outbound note="leak"
rule R4 applies entry=T1557 where kind=flow tag=command note="command aitm"
rule R5 applies entry=LLM06 where kind=process stride=E note="agency"
rule R6 applies entry=LLM06 where kind=entity note="never matches: entities admit neither I nor E"
)";

using Key = std::tuple<std::string, std::string, std::string, std::string>;  // crossing, target, tech, letters

std::set<Key> keys(const std::vector<Threat>& threats) {
    std::set<Key> out;
    for (const auto& t : threats)
        if (!t.model_scoped()) out.insert({t.crossing, t.target, t.tech_id, t.stride.to_string('\0')});
    return out;
}

std::set<std::string> techs_at(const std::vector<Threat>& threats, const std::string& crossing) {
    std::set<std::string> out;
    for (const auto& t : threats)
        if (t.crossing == crossing) out.insert(t.tech_id);
    return out;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("catalog lookup") {
    Catalog c = testing::catalog_ok(kCatalog);
    CHECK(lookup(c.entries, "T1557").name == "AiTM");
    CHECK_THROWS_AS(lookup(c.entries, "T9999"), UnknownTechniqueError);
    CHECK_THROWS_AS(lookup(c.entries, "t1557"), UnknownTechniqueError);
}

TEST_CASE("direction is judged against boundaries") {
    Model m = testing::parse_ok(testing::kSmallModel);
    CHECK(is_inbound(m, *m.find_flow("DF1")));
    CHECK_FALSE(is_outbound(m, *m.find_flow("DF1")));
    CHECK(is_outbound(m, *m.find_flow("DF4")));
    // TB1 -> TB2 is both
    CHECK(is_inbound(m, *m.find_flow("DF3")));
    CHECK(is_outbound(m, *m.find_flow("DF3")));
    CHECK_FALSE(is_inbound(m, *m.find_flow("DF7")));
}

TEST_CASE("rule matching applies selectors and the applicability filter") {
    Model m = testing::parse_ok(testing::kSmallModel);
    Catalog c = testing::catalog_ok(kCatalog);
    auto groups = find_crossings(m).groups;
    const CrossingGroup& x3 = groups[3];  // DF3, P2 <-> P3
    REQUIRE(x3.flows == std::vector<std::string>{"DF3"});
    auto matches = match_rules(c, m, x3);
    std::vector<std::string> got;
    for (const auto& r : matches) got.push_back(r.target + ":" + r.tech_id + ":" + r.rule_id + ":" + r.letters.to_string());
    CHECK(got == std::vector<std::string>{"DF3:T1040:R3:I", "DF3:T1557:R1:T", "DF3:T1557:R4:T", "P2:LLM06:R5:E",
                                          "P3:LLM06:R5:E"});
}

TEST_CASE("elicit deduplicates per target and technique") {
    Model m = testing::parse_ok(testing::kSmallModel);
    Catalog c = testing::catalog_ok(kCatalog);
    auto threats = elicit(m, c);
    std::vector<Threat> df3;
    for (const auto& t : threats)
        if (t.target == "DF3" && t.tech_id == "T1557") df3.push_back(t);
    REQUIRE(df3.size() == 1);
    CHECK(df3[0].rule_ids == std::vector<std::string>{"R1", "R4"});
    CHECK(df3[0].finding == "flow aitm | command aitm");
    CHECK(df3[0].stride == StrideSet{Stride::T});
    CHECK(df3[0].threat_id == make_threat_id("x3", "DF3", "T1557"));
    // S lands on the entity, T on the flow
    CHECK(keys(threats).count({"x1", "E1", "T1557", "S"}));
    CHECK(keys(threats).count({"x1", "DF1", "T1557", "T"}));
    for (const auto& t : threats) CHECK(is_applicable(t, m));
}

TEST_CASE("threat ids are stable and distinct") {
    CHECK(make_threat_id("ii", "DF5", "LLM02") == make_threat_id("ii", "DF5", "LLM02"));
    CHECK(make_threat_id("ii", "DF5", "LLM02") != make_threat_id("ii", "DF6", "LLM02"));
    CHECK(make_threat_id("ii", "DF5", "LLM02").rfind("TH-ii-", 0) == 0);
    CHECK(make_threat_id("ii", "DF5", "LLM02").size() == std::string("TH-ii-").size() + 8);
}

TEST_CASE("repudiation finding") {
    Model m = testing::parse_ok(testing::kSmallModel);
    Catalog c = testing::catalog_ok(kCatalog);
    auto r = consolidate_repudiation(m, c);
    REQUIRE(r.size() == 1);
    // P0 is decomposed, so only the refined processes count
    CHECK(r[0].subjects == std::vector<std::string>{"P1", "P2", "P3"});
    CHECK(r[0].stride == StrideSet{Stride::R});
    CHECK(is_applicable(r[0], m));

    Model logged = testing::parse_ok(R"(model "m"
process P1 "a" audit_logging=true
entity E1 "b"
flow DF1 E1 -> P1 "x"
)");
    CHECK(consolidate_repudiation(logged, c).empty());

    Catalog without = testing::catalog_ok("catalog ATTACK\nentry T1557 \"AiTM\" category=CCT stride=S,T\n");
    CHECK(consolidate_repudiation(m, without).empty());
}

TEST_CASE("is_applicable rejects letters outside the table") {
    Model m = testing::parse_ok(testing::kSmallModel);
    Threat t;
    t.target = "E1";
    t.target_kind = TargetKind::ExternalEntity;
    t.stride = StrideSet{Stride::T};
    CHECK_FALSE(is_applicable(t, m));
    t.stride = StrideSet{};
    CHECK_FALSE(is_applicable(t, m));
}

TEST_CASE("corpus elicitation per crossing") {
    auto report = analyze(testing::corpus_model(), testing::corpus_catalog());
    const std::map<std::string, std::set<std::string>> minimum = {
        {"i", {"LLM01", "AML.T0054", "T1557", "T1565.002", "T1040", "T1499.002", "T1078", "T1110.004", "T1539",
               "T1068"}},
        {"ii", {"LLM02", "LLM07", "LLM05", "LLM10", "T1557", "T1565.002", "T1498", "T1552.001", "T1499.003",
                "T1068"}},
        {"iii", {"T1557", "T1565.002", "AML.T0043", "LLM01", "AML.T0051.001", "T1040", "T1499", "T1203"}},
        {"iv", {"T1557", "T1565.002", "T1190", "LLM01", "LLM02", "LLM06", "T1499"}},
        {"v", {"T1557", "T1565.002", "T1498", "T1499", "AML.T0043", "LLM01", "T1040", "LLM05", "LLM06"}},
        {"vi", {"AML.T0041", "AML.T0043.003", "T1565.002", "T1499"}},
    };
    for (const auto& [label, techs] : minimum) {
        CAPTURE(label);
        CHECK(techs_at(report.threats, label) == techs);
    }
    auto k = keys(report.threats);
    CHECK(k.count({"ii", "DF5", "LLM02", "I"}));
    CHECK(k.count({"vi", "E2", "AML.T0041", "S"}));
    CHECK(k.count({"vi", "DF11", "AML.T0041", "T"}));
    CHECK(k.count({"v", "P2", "LLM06", "E"}));
    CHECK(k.count({"v", "P6", "T1557", "S"}));
    CHECK(k.count({"i", "DF1", "LLM01", "T"}));

    const Threat& last = report.threats.back();
    CHECK(last.tech_id == "T1070");
    CHECK(last.subjects == std::vector<std::string>{"P1", "P2", "P3", "P4", "P5", "P6", "E3", "E5"});
}

TEST_CASE("every cited technique is reachable from a rule") {
    Catalog c = testing::corpus_catalog();
    std::ifstream in(testing::corpus_dir() / "citations.txt");
    REQUIRE(in);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++n;
        CAPTURE(line);
        REQUIRE(find_entry(c.entries, line));
        bool ruled = line == kRepudiationTechnique;
        for (const auto& r : c.rules) ruled = ruled || r.entry == line;
        CHECK(ruled);
    }
    CHECK(n == 26);
}

}
