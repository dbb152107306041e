#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crossway/dsl.hpp"

namespace crossway::detail {

enum class TokenKind { Word, String, Attr, Arrow, LBrace, RBrace };

struct Token {
    TokenKind kind = TokenKind::Word;
    std::string text;   // word, string contents, or attribute key
    std::string value;  // attribute value
    int column = 1;
};

struct LexedLine {
    int number = 1;
    int indent = 0;  // leading spaces
    bool has_tab_indent = false;
    std::vector<Token> tokens;
};

/// Splits text into lines of tokens. Blank and comment-only lines are dropped.
/// Lexical errors are appended to `errors` and the offending line is skipped.
std::vector<LexedLine> lex(std::string_view text, std::vector<ParseError>& errors);

/// Comma-separated tag list. Returns nullopt on a malformed tag; duplicates
/// are reported through `duplicates`.
std::optional<std::vector<std::string>> split_tags(std::string_view value, std::vector<std::string>& duplicates);

inline ParseError make_error(int line, int column, std::string code, std::string message) {
    return ParseError{SourceSpan{line, column}, std::move(code), std::move(message)};
}

}  // namespace crossway::detail
