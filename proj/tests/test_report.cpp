#include <doctest.h>

#include <json.hpp>

#include "crossway/chains.hpp"
#include "crossway/report.hpp"
#include "support.hpp"

using namespace crossway;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

ElicitationReport corpus_report() { return analyze(testing::corpus_model(), testing::corpus_catalog()); }

}  // namespace

TEST_SUITE("report") {

TEST_CASE("format names") {
    CHECK(report_format_from("md") == ReportFormat::Markdown);
    CHECK(report_format_from("markdown") == ReportFormat::Markdown);
    CHECK(report_format_from("json") == ReportFormat::JSONLike);
    CHECK_FALSE(report_format_from("xml"));
}

TEST_CASE("markdown threat table") {
    std::string md = threat_table(corpus_report(), ReportFormat::Markdown);
    CHECK(count(md, "\n## Crossing (") == 6);
    auto i = md.find("## Crossing (i)");
    auto ii = md.find("## Crossing (ii)");
    REQUIRE(i != std::string::npos);
    REQUIRE(ii != std::string::npos);
    CHECK(md.substr(i, ii - i).find("| DF1 | T | ConT | LLM01 |") != std::string::npos);
    CHECK(md.find("## Model-wide findings") != std::string::npos);
}

TEST_CASE("empty model renders the header only") {
    ElicitationReport r;
    r.model_name = "empty";
    CHECK(threat_table(r, ReportFormat::Markdown) == "# Threat report: empty\n");
}

TEST_CASE("crossing without threats says so") {
    Model m = testing::parse_ok(testing::kSmallModel);
    Catalog none = testing::catalog_ok("catalog ATTACK\nentry T1 \"x\" category=CCT stride=T\n");
    std::string md = threat_table(analyze(m, none), ReportFormat::Markdown);
    CHECK(count(md, "_No threats elicited._") == 4);
}

TEST_CASE("threat tables have no DOT form") {
    CHECK_THROWS_AS(threat_table(corpus_report(), ReportFormat::DOT), std::invalid_argument);
}

TEST_CASE("csv quoting and line endings") {
    std::string csv = threat_table(corpus_report(), ReportFormat::CSV);
    CHECK(csv.rfind("threat_id,crossing,target,target_kind,stride,category,tech_id,finding\r\n", 0) == 0);
    CHECK(csv.find("\"Wireless traffic exposes intent, position and timing\"") != std::string::npos);
    CHECK(count(csv, "\r\n") == corpus_report().threats.size() + 1);
}

TEST_CASE("json export schema") {
    Model m = testing::corpus_model();
    auto report = corpus_report();
    auto chains = enumerate_chains(m, "E4", "DF10", 5);
    auto j = nlohmann::json::parse(export_json(m, report.crossings, report.threats, chains));
    CHECK(j["version"] == "1");
    CHECK(j["model"] == m.name);
    CHECK(j["crossings"].size() == 6);
    CHECK(j["threats"].size() == report.threats.size());
    CHECK(j["chains"].size() == chains.size());
    CHECK(j["crossings"][3]["label"] == "iv");
    CHECK(j["threats"][0].contains("threat_id"));
    CHECK(j["threats"][0]["stride"] == "T");
}

TEST_CASE("dfd rendering") {
    Model m = testing::corpus_model();
    std::string dot = render_dfd(m);
    CHECK(count(dot, "subgraph cluster_") == 2);
    CHECK(count(dot, "style=dashed") == 2);
    CHECK(dot.find("D1 [shape=plaintext") != std::string::npos);
    CHECK(count(dot, "SIDES=\"TB\"") == 3);
    CHECK(dot.find("ES1 [shape=ellipse, label=\"ES1\\nEdge Server\", style=dotted]") != std::string::npos);
    CHECK(dot.find("E1 -> ES1 [label=\"CF1\", style=dotted") != std::string::npos);
    CHECK(dot.find("E1 -> P1 [label=\"DF1\"];") != std::string::npos);
}

TEST_CASE("dot output is ASCII") {
    Model m = testing::parse_ok("model \"caf\xC3\xA9 \xE2\x86\x92 robot\"\nentity E1 \"\xCE\xBB <x>\"\n"
                                "store D1 \"m\xC3\xBC & co\"\nflow DF1 E1 -> D1 \"x\"\n");
    std::string dot = render_dfd(m);
    for (char c : dot) CHECK(static_cast<unsigned char>(c) < 0x80);
    CHECK(dot.find("caf&#233; &#8594; robot") != std::string::npos);
    CHECK(dot.find("&#955; <x>") != std::string::npos);
    CHECK(dot.find("m&#252; &amp; co") != std::string::npos);
}

TEST_CASE("tree rendering") {
    std::string dot = render_tree(testing::corpus_tree());
    CHECK(dot.find("n0 [shape=ellipse, label=\"AND\\n") != std::string::npos);
    CHECK(count(dot, "  n0 -> ") == 3);
    CHECK(count(dot, "shape=box") == 10);
}

TEST_CASE("emitters are byte-deterministic") {
    Model m = testing::corpus_model();
    auto render_all = [&] {
        auto report = analyze(m, testing::corpus_catalog());
        auto chains = enumerate_chains(m, "E2", "DF10");
        std::string all;
        for (auto f : {ReportFormat::Markdown, ReportFormat::CSV, ReportFormat::JSONLike}) {
            all += threat_table(report, f);
            all += crossings_report(m, report.crossings, f);
            all += chains_report(m, chains, f);
        }
        all += export_json(m, report.crossings, report.threats, chains);
        all += chain_summary(m, chains);
        all += render_dfd(m) + render_tree(testing::corpus_tree());
        return all;
    };
    const std::string first = render_all();
    CHECK(render_all() == first);
    CHECK(render_all() == first);
}

}
