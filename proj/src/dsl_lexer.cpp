#include "dsl_lexer.hpp"

#include <set>
#include <sstream>

#include "crossway/ids.hpp"

namespace crossway {

std::string format_parse_error(const ParseError& e, std::string_view file) {
    std::ostringstream os;
    if (!file.empty()) os << file << ':';
    os << e.span.line << ':' << e.span.column << ": error[" << e.code << "]: " << e.message;
    return os.str();
}

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

namespace detail {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Reads a quoted string starting at s[pos] == '"'. Advances pos past the
// closing quote. Returns nullopt and fills `err` on failure.
std::optional<std::string> read_string(std::string_view s, std::size_t& pos, int line, ParseError& err) {
    const std::size_t start = pos;
    ++pos;
    std::string out;
    while (pos < s.size()) {
        char c = s[pos];
        if (c == '"') {
            ++pos;
            return out;
        }
        if (c == '\\') {
            if (pos + 1 >= s.size() || (s[pos + 1] != '"' && s[pos + 1] != '\\')) {
                err = make_error(line, static_cast<int>(pos) + 1, "bad-escape", "only \\\" and \\\\ escapes are allowed");
                return std::nullopt;
            }
            out.push_back(s[pos + 1]);
            pos += 2;
            continue;
        }
        out.push_back(c);
        ++pos;
    }
    err = make_error(line, static_cast<int>(start) + 1, "unterminated-string", "missing closing quote");
    return std::nullopt;
}

}  // namespace

std::vector<LexedLine> lex(std::string_view text, std::vector<ParseError>& errors) {
    std::vector<LexedLine> lines;
    int number = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(begin, end - begin);
        ++number;

        LexedLine line;
        line.number = number;
        std::size_t pos = 0;
        while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t')) {
            if (raw[pos] == '\t') line.has_tab_indent = true;
            ++pos;
        }
        line.indent = static_cast<int>(pos);

        bool failed = false;
        while (pos < raw.size() && !failed) {
            char c = raw[pos];
            if (is_space(c)) {
                ++pos;
                continue;
            }
            if (c == '#') break;
            const int col = static_cast<int>(pos) + 1;
            if (c == '"') {
                ParseError err;
                auto str = read_string(raw, pos, number, err);
                if (!str) {
                    errors.push_back(err);
                    failed = true;
                    break;
                }
                line.tokens.push_back({TokenKind::String, *str, {}, col});
                continue;
            }
            if (c == '{' || c == '}') {
                line.tokens.push_back({c == '{' ? TokenKind::LBrace : TokenKind::RBrace, std::string(1, c), {}, col});
                ++pos;
                continue;
            }
            std::size_t wend = pos;
            while (wend < raw.size() && !is_space(raw[wend]) && raw[wend] != '"' && raw[wend] != '{' &&
                   raw[wend] != '}' && raw[wend] != '#')
                ++wend;
            std::string word(raw.substr(pos, wend - pos));
            pos = wend;
            if (word == "->") {
                line.tokens.push_back({TokenKind::Arrow, word, {}, col});
                continue;
            }
            auto eq = word.find('=');
            if (eq != std::string::npos) {
                Token t{TokenKind::Attr, word.substr(0, eq), word.substr(eq + 1), col};
                if (t.value.empty() && pos < raw.size() && raw[pos] == '"') {
                    ParseError err;
                    auto str = read_string(raw, pos, number, err);
                    if (!str) {
                        errors.push_back(err);
                        failed = true;
                        break;
                    }
                    t.value = *str;
                }
                if (t.text.empty()) {
                    errors.push_back(make_error(number, col, "malformed-attribute", "attribute without a name"));
                    failed = true;
                    break;
                }
                line.tokens.push_back(std::move(t));
                continue;
            }
            line.tokens.push_back({TokenKind::Word, std::move(word), {}, col});
        }
        if (!failed && !line.tokens.empty()) lines.push_back(std::move(line));

        if (end == text.size()) break;
        begin = end + 1;
    }
    return lines;
}

std::optional<std::vector<std::string>> split_tags(std::string_view value, std::vector<std::string>& duplicates) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    std::size_t begin = 0;
    while (true) {
        std::size_t end = value.find(',', begin);
        if (end == std::string_view::npos) end = value.size();
        std::string tag(value.substr(begin, end - begin));
        if (!is_tag(tag)) return std::nullopt;
        if (seen.insert(tag).second)
            out.push_back(tag);
        else
            duplicates.push_back(tag);
        if (end == value.size()) break;
        begin = end + 1;
    }
    return out;
}

}  // namespace detail
}  // namespace crossway
