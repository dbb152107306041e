#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "crossway/cli.hpp"
#include "support.hpp"

using namespace crossway;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus(const char* name) { return (testing::corpus_dir() / name).string(); }

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("crossway_cli_" + name);
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate") {
    auto ok = run({"validate", corpus("paper_l1.tm")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "0 error(s), 0 warning(s)\n");

    auto bad = run({"validate", temp_file("dangling.tm", "model \"m\"\nprocess P1 \"a\"\nflow DF1 P1 -> P9 \"x\"\n")});
    CHECK(bad.code == 2);
    CHECK(bad.out.find("dangling-endpoint") != std::string::npos);

    auto broken = run({"validate", temp_file("broken.tm", "model \"m\"\nwidget W1 \"a\"\n")});
    CHECK(broken.code == 3);
    CHECK(broken.err.find("unknown-keyword") != std::string::npos);
}

TEST_CASE("crossings") {
    auto r = run({"crossings", corpus("paper_l1.tm"), "--format", "csv"});
    CHECK(r.code == 0);
    std::ifstream golden(testing::corpus_dir() / "golden" / "crossings.csv", std::ios::binary);
    std::stringstream expected;
    expected << golden.rdbuf();
    CHECK(r.out == expected.str());
    CHECK(run({"crossings", corpus("paper_l1.tm"), "--format", "dot"}).code == 4);
}

TEST_CASE("analysis commands refuse invalid models") {
    auto path = temp_file("selfflow.tm", "model \"m\"\nprocess P1 \"a\"\nflow DF1 P1 -> P1 \"x\"\n");
    auto r = run({"crossings", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("self-flow") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("elicit") {
    auto r = run({"elicit", corpus("paper_l1.tm"), "--catalog", corpus("paper_catalog.tc")});
    CHECK(r.code == 0);
    std::size_t sections = 0;
    for (auto pos = r.out.find("## Crossing ("); pos != std::string::npos; pos = r.out.find("## Crossing (", pos + 1))
        ++sections;
    CHECK(sections == 6);

    auto one = run({"elicit", corpus("paper_l1.tm"), "--catalog", corpus("paper_catalog.tc"), "--crossing", "iii",
                    "--format", "csv"});
    CHECK(one.code == 0);
    CHECK(one.out.find(",ii,") == std::string::npos);
    CHECK(one.out.find(",iii,DF13,") != std::string::npos);

    CHECK(run({"elicit", corpus("paper_l1.tm"), "--catalog", corpus("paper_catalog.tc"), "--crossing", "zz"}).code ==
          4);
}

TEST_CASE("elicit --fail-on") {
    const std::vector<std::string> base = {"elicit", corpus("paper_l1.tm"), "--catalog", corpus("paper_catalog.tc")};
    auto with = [&](std::vector<std::string> extra) {
        auto args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return run(args).code;
    };
    CHECK(with({"--fail-on", "ConT"}) == 1);
    CHECK(with({"--fail-on", "E"}) == 1);
    CHECK(with({"--crossing", "vi", "--fail-on", "ConT,I"}) == 0);
    CHECK(with({"--crossing", "vi", "--fail-on", "S"}) == 1);
    CHECK(with({"--fail-on", "Q"}) == 4);
}

TEST_CASE("bad catalog is a parse error") {
    auto cat = temp_file("bad.tc", "catalog ATTACK\nentry T1 \"x\" category=ZZZ stride=T\n");
    auto r = run({"elicit", corpus("paper_l1.tm"), "--catalog", cat});
    CHECK(r.code == 3);
    CHECK(r.err.find("unknown-category") != std::string::npos);
}

TEST_CASE("chains") {
    auto r = run({"chains", corpus("paper_l1.tm"), "--from", "E4", "--impact", "DF10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("iv \xE2\x86\x92 ii \xE2\x86\x92 v \xE2\x86\x92 vi") != std::string::npos);

    auto p = run({"chains", corpus("paper_l1.tm"), "--from", "E1", "--impact", "DF10", "--persistent-only",
                  "--format", "csv"});
    CHECK(p.code == 0);
    std::istringstream lines(p.out);
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find("D1") != std::string::npos);
    }
    CHECK(rows > 0);

    CHECK(run({"chains", corpus("paper_l1.tm"), "--from", "P1", "--impact", "DF10"}).code == 4);
    CHECK(run({"chains", corpus("paper_l1.tm"), "--from", "E1", "--impact", "DF99"}).code == 4);
    CHECK(run({"chains", corpus("paper_l1.tm"), "--from", "E1"}).code == 4);
}

TEST_CASE("tree") {
    auto cuts = run({"tree", corpus("chain1.at"), "cuts"});
    CHECK(cuts.code == 0);
    CHECK(cuts.out.rfind("{L1, L6, L8, L9, L10}\n", 0) == 0);

    std::string all = "L1=true,L2=true,L3=true,L4=true,L5=true,L6=true,L7=true,L8=true,L9=true,L10=true";
    auto t = run({"tree", corpus("chain1.at"), "eval", "--set", all});
    CHECK(t.code == 0);
    CHECK(t.out == "true\n");

    std::string some = "L1=true,L2=false,L3=false,L4=false,L5=false,L6=true,L7=false,L8=true,L9=true,L10=false";
    CHECK(run({"tree", corpus("chain1.at"), "eval", "--set", some}).out == "false\n");

    auto missing = run({"tree", corpus("chain1.at"), "eval", "--set", "L1=true"});
    CHECK(missing.code == 4);
    CHECK(missing.err.find("L2") != std::string::npos);
    CHECK(run({"tree", corpus("chain1.at"), "eval", "--set", "L1=maybe"}).code == 4);
}

TEST_CASE("render") {
    auto dfd = run({"render", "dfd", corpus("paper_l1.tm")});
    CHECK(dfd.code == 0);
    CHECK(dfd.out.rfind("digraph ", 0) == 0);

    auto out = (std::filesystem::temp_directory_path() / "crossway_cli_tree.dot").string();
    std::filesystem::remove(out);
    auto tree = run({"render", "tree", corpus("chain1.at"), "-o", out});
    CHECK(tree.code == 0);
    CHECK(tree.out.empty());
    CHECK(std::filesystem::file_size(out) > 0);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 4);
    CHECK(run({"frobnicate"}).code == 4);
    CHECK(run({"validate", "/nonexistent/model.tm"}).code == 4);
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("elicit") != std::string::npos);
}

}
