#pragma once

#include <doctest.h>

#include <filesystem>
#include <string>

#include "crossway/corpus.hpp"
#include "crossway/dsl.hpp"

namespace testing {

inline std::filesystem::path corpus_dir() { return CROSSWAY_CORPUS_DIR; }

inline crossway::Model parse_ok(const std::string& text) {
    auto r = crossway::parse_model(text);
    for (const auto& e : r.errors) FAIL_CHECK(crossway::format_parse_error(e));
    REQUIRE(r.ok());
    return *r.value;
}

inline crossway::Catalog catalog_ok(const std::string& text) {
    auto r = crossway::parse_catalog(text);
    for (const auto& e : r.errors) FAIL_CHECK(crossway::format_parse_error(e));
    REQUIRE(r.ok());
    return *r.value;
}

inline crossway::AttackTree tree_ok(const std::string& text) {
    auto r = crossway::parse_tree(text);
    for (const auto& e : r.errors) FAIL_CHECK(crossway::format_parse_error(e));
    REQUIRE(r.ok());
    return *r.value;
}

inline crossway::Model corpus_model() { return parse_ok(crossway::load_corpus(corpus_dir()).model_text); }
inline crossway::Catalog corpus_catalog() { return catalog_ok(crossway::load_corpus(corpus_dir()).catalog_text); }
inline crossway::AttackTree corpus_tree() { return tree_ok(crossway::load_corpus(corpus_dir()).tree_text); }

// Two boundaries, a hierarchy and an external entity pair.
inline const char* kSmallModel = R"(model "small"
entity E1 "User"
entity E2 "Cloud"
process P0 "Server"
process P1 "Front" parent=P0
process P2 "Back" parent=P0
process P3 "Robot"
store D1 "Memory" tags=context-store
boundary TB1 "Server" { P1 P2 D1 }
boundary TB2 "Robot" { P3 }
flow DF1 E1 -> P1 "task"
flow DF2 P1 -> P2 "job"
flow DF3 P2 -> P3 "cmd" tags=command
flow DF4 P3 -> E1 "report"
flow DF5 P2 -> D1 "save"
flow DF6 D1 -> P2 "load"
flow DF7 E2 -> E1 "hint" external crossing=k
flow CF1 E1 -> P0 "task"
flow CF2 P0 -> P3 "cmd"
)";

}  // namespace testing
