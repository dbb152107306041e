#include <doctest.h>

#include <algorithm>
#include <vector>

#include "crossway/ids.hpp"
#include "crossway/model.hpp"
#include "crossway/stride.hpp"

using namespace crossway;

TEST_SUITE("core") {

TEST_CASE("natural order of ids") {
    CHECK(natural_less("DF2", "DF10"));
    CHECK_FALSE(natural_less("DF10", "DF2"));
    CHECK(natural_less("x2", "x10"));
    CHECK(natural_compare("P1", "P1") == 0);
    CHECK(natural_less("AML.T0043", "AML.T0043.003"));
    CHECK(natural_less("T1499", "T1499.002"));
    CHECK(natural_less("T1499.002", "T1557"));
    CHECK(natural_less("E5", "P1"));
}

TEST_CASE("roman crossing labels sort by value, before anything else") {
    std::vector<std::string> labels = {"x1", "vi", "iv", "ii", "v", "i", "iii", "ix", "k"};
    std::sort(labels.begin(), labels.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
    CHECK(labels == std::vector<std::string>{"i", "ii", "iii", "iv", "v", "vi", "ix", "k", "x1"});
    CHECK(roman_value("iv") == 4);
    CHECK(roman_value("xiv") == 14);
    CHECK(roman_value("iiii") == 0);
    CHECK(roman_value("x1") == 0);
    CHECK(roman_value("") == 0);
}

TEST_CASE("id validators") {
    CHECK(is_element_id("DF12"));
    CHECK(is_element_id("TB1"));
    CHECK_FALSE(is_element_id("12"));
    CHECK_FALSE(is_element_id("P"));
    CHECK_FALSE(is_element_id("P1a"));
    CHECK(is_identifier("AML.T0051.001"));
    CHECK(is_identifier("R-IV-01"));
    CHECK_FALSE(is_identifier("-x"));
    CHECK(is_tag("context-store"));
    CHECK_FALSE(is_tag("Context"));
    CHECK_FALSE(is_tag(""));
}

TEST_CASE("StrideSet parse and print") {
    CHECK(StrideSet::parse("S,T") == StrideSet{Stride::S, Stride::T});
    CHECK(StrideSet::parse("TS") == StrideSet{Stride::S, Stride::T});
    CHECK(StrideSet::parse("S/T")->to_string() == "S/T");
    CHECK(StrideSet::parse("E,S")->to_string(',') == "S,E");
    CHECK(StrideSet::parse("STRIDE")->size() == 6);
    CHECK_FALSE(StrideSet::parse("X"));
    CHECK_FALSE(StrideSet::parse(""));
    CHECK(StrideSet{}.to_string() == "-");
    CHECK(StrideSet{Stride::I, Stride::D}.to_string('\0') == "ID");
    CHECK((StrideSet{Stride::S, Stride::T} & StrideSet{Stride::T}) == StrideSet{Stride::T});
    CHECK(StrideSet{Stride::T}.subset_of(StrideSet{Stride::T, Stride::I}));
}

TEST_CASE("STRIDE-per-element applicability table") {
    // rows: entity, process, flow, store; columns S T R I D E
    const bool table[4][6] = {
        {true, false, true, false, false, false},
        {true, true, true, true, true, true},
        {false, true, false, true, true, false},
        {false, true, true, true, true, false},
    };
    const TargetKind kinds[4] = {TargetKind::ExternalEntity, TargetKind::Process, TargetKind::DataFlow,
                                 TargetKind::DataStore};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 6; ++c) {
            CAPTURE(r);
            CAPTURE(c);
            CHECK(stride_applicability(kinds[r]).contains(kAllStride[c]) == table[r][c]);
        }
    CHECK(stride_applicability(ElementKind::DataStore) == stride_applicability(TargetKind::DataStore));
}

}
