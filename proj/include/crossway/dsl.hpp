#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crossway/attack_tree.hpp"
#include "crossway/catalog.hpp"
#include "crossway/model.hpp"

namespace crossway {

struct SourceSpan {
    int line = 1;
    int column = 1;
    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct ParseError {
    SourceSpan span;
    std::string code;
    std::string message;
};

std::string format_parse_error(const ParseError& e, std::string_view file = {});

template <class T>
struct ParseResult {
    std::optional<T> value;  // empty whenever errors is non-empty
    std::vector<ParseError> errors;
    std::vector<ParseError> warnings;

    bool ok() const { return value.has_value() && errors.empty(); }
};

struct ModelParseOptions {
    /// When false, undeclared flow endpoints, boundary members and parents
    /// are left for validate_model to report instead of failing the parse.
    bool check_references = true;
};

ParseResult<Model> parse_model(std::string_view text, ModelParseOptions options = {});
std::string serialize_model(const Model& model);

ParseResult<Catalog> parse_catalog(std::string_view text);
std::string serialize_catalog(const Catalog& catalog);

ParseResult<AttackTree> parse_tree(std::string_view text);
std::string serialize_tree(const AttackTree& tree);

/// Quotes with backslash escapes for '"' and '\'.
std::string quote(std::string_view s);

}  // namespace crossway
