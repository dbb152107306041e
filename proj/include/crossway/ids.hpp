#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace crossway {

/// Natural ordering for identifiers: digit runs compare by numeric value,
/// so "DF2" < "DF10" and "x2" < "x10". Roman-numeral crossing labels
/// ("i" .. "xxxix") compare by value and sort before any other label.
int natural_compare(std::string_view a, std::string_view b);

inline bool natural_less(std::string_view a, std::string_view b) {
    return natural_compare(a, b) < 0;
}

/// Lexicographic comparison of id lists using natural_compare per element.
bool natural_less(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Value of a lowercase roman numeral, or 0 if `s` is not one.
int roman_value(std::string_view s);

/// letters followed by digits, e.g. "P1", "DF12", "TB2".
bool is_element_id(std::string_view s);

/// Catalog technique ids and rule/leaf ids: [A-Za-z0-9][A-Za-z0-9_.-]*
bool is_identifier(std::string_view s);

/// Lowercase tag: [a-z0-9][a-z0-9_.-]*
bool is_tag(std::string_view s);

/// Crossing labels use the tag alphabet too.
inline bool is_crossing_label(std::string_view s) { return is_tag(s); }

}  // namespace crossway
