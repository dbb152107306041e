#include <algorithm>
#include <set>
#include <sstream>

#include "crossway/dsl.hpp"
#include "crossway/ids.hpp"
#include "dsl_lexer.hpp"

namespace crossway {

using detail::LexedLine;
using detail::make_error;
using detail::Token;
using detail::TokenKind;

namespace {

std::optional<TargetKind> kind_from(std::string_view s) {
    if (s == "process") return TargetKind::Process;
    if (s == "entity") return TargetKind::ExternalEntity;
    if (s == "store") return TargetKind::DataStore;
    if (s == "flow") return TargetKind::DataFlow;
    return std::nullopt;
}

std::optional<Direction> direction_from(std::string_view s) {
    if (s == "any") return Direction::Any;
    if (s == "inbound") return Direction::Inbound;
    if (s == "outbound") return Direction::Outbound;
    return std::nullopt;
}

class CatalogParser {
public:
    explicit CatalogParser(std::string_view text) { lines_ = detail::lex(text, errors_); }

    ParseResult<Catalog> run() {
        for (const auto& line : lines_) parse_line(line);
        for (const auto& [rule, span] : entry_refs_) {
            if (!find_entry(catalog_.entries, rule))
                errors_.push_back(ParseError{span, "unknown-entry", "rule references undeclared entry '" + rule + "'"});
        }
        ParseResult<Catalog> result;
        result.errors = std::move(errors_);
        if (result.errors.empty()) result.value = std::move(catalog_);
        return result;
    }

private:
    void error(const LexedLine& line, const Token& tok, std::string code, std::string message) {
        errors_.push_back(make_error(line.number, tok.column, std::move(code), std::move(message)));
    }

    const Token* word_at(const LexedLine& line, std::size_t idx, const char* what) {
        if (idx < line.tokens.size() && line.tokens[idx].kind == TokenKind::Word) return &line.tokens[idx];
        const Token& at = idx < line.tokens.size() ? line.tokens[idx] : line.tokens.back();
        error(line, at, idx < line.tokens.size() ? "unexpected-token" : "missing-token", std::string("expected ") + what);
        return nullptr;
    }

    void parse_line(const LexedLine& line) {
        const Token& head = line.tokens.front();
        if (head.kind == TokenKind::Word) {
            if (head.text == "catalog") return parse_catalog_decl(line);
            if (head.text == "entry") return parse_entry(line);
            if (head.text == "rule") return parse_rule(line);
        }
        error(line, head, "unknown-keyword", "unknown keyword '" + head.text + "'");
    }

    void parse_catalog_decl(const LexedLine& line) {
        const Token* name = word_at(line, 1, "catalog name");
        if (!name) return;
        auto c = catalog_name_from(name->text);
        if (!c) {
            error(line, *name, "unknown-catalog", "catalog must be ATTACK, ATLAS or OWASP_LLM");
            return;
        }
        if (line.tokens.size() > 2) {
            error(line, line.tokens[2], "unexpected-token", "unexpected token after catalog name");
            return;
        }
        current_ = *c;
    }

    void parse_entry(const LexedLine& line) {
        const Token* id = word_at(line, 1, "technique id");
        if (!id) return;
        if (!is_identifier(id->text)) {
            error(line, *id, "malformed-id", "'" + id->text + "' is not a valid technique id");
            return;
        }
        if (!current_) {
            error(line, line.tokens.front(), "entry-outside-catalog", "entry appears before any `catalog` line");
            return;
        }
        if (line.tokens.size() < 3 || line.tokens[2].kind != TokenKind::String) {
            error(line, line.tokens.size() < 3 ? *id : line.tokens[2], "unexpected-token", "expected entry name string");
            return;
        }
        CatalogEntry e;
        e.tech_id = id->text;
        e.name = line.tokens[2].text;
        e.catalog = *current_;
        bool have_category = false, have_stride = false;
        for (std::size_t k = 3; k < line.tokens.size(); ++k) {
            const Token& t = line.tokens[k];
            if (t.kind != TokenKind::Attr) {
                error(line, t, "unexpected-token", "expected key=value attribute");
                return;
            }
            if (t.text == "category" && !have_category) {
                auto c = category_from(t.value);
                if (!c) {
                    error(line, t, "unknown-category", "category must be CCT, AdvT or ConT, got '" + t.value + "'");
                    return;
                }
                e.category = *c;
                have_category = true;
            } else if (t.text == "stride" && !have_stride) {
                auto s = StrideSet::parse(t.value);
                if (!s) {
                    error(line, t, "malformed-stride", "stride must list letters from S,T,R,I,D,E");
                    return;
                }
                e.stride = *s;
                have_stride = true;
            } else {
                error(line, t, "unknown-attribute", "unexpected attribute '" + t.text + "' on entry");
                return;
            }
        }
        if (!have_category || !have_stride) {
            error(line, *id, "missing-attribute", "entry needs category= and stride=");
            return;
        }
        if (find_entry(catalog_.entries, e.tech_id)) {
            error(line, *id, "duplicate-declaration", "technique '" + e.tech_id + "' already declared");
            return;
        }
        catalog_.entries.push_back(std::move(e));
    }

    void parse_rule(const LexedLine& line) {
        const Token* id = word_at(line, 1, "rule id");
        if (!id) return;
        if (!is_identifier(id->text)) {
            error(line, *id, "malformed-id", "'" + id->text + "' is not a valid rule id");
            return;
        }
        const Token* applies = word_at(line, 2, "'applies'");
        if (!applies) return;
        if (applies->text != "applies") {
            error(line, *applies, "unexpected-token", "expected 'applies'");
            return;
        }
        if (line.tokens.size() < 4 || line.tokens[3].kind != TokenKind::Attr || line.tokens[3].text != "entry") {
            error(line, line.tokens.size() < 4 ? *applies : line.tokens[3], "unexpected-token", "expected entry=<TechID>");
            return;
        }
        const Token& entry = line.tokens[3];
        const Token* where = word_at(line, 4, "'where'");
        if (!where) return;
        if (where->text != "where") {
            error(line, *where, "unexpected-token", "expected 'where'");
            return;
        }

        ElicitationRule r;
        r.rule_id = id->text;
        r.entry = entry.value;
        std::set<std::string> seen;
        bool have_kind = false, have_note = false, have_direction = false;
        const Token* direction_tok = nullptr;
        for (std::size_t k = 5; k < line.tokens.size(); ++k) {
            const Token& t = line.tokens[k];
            if (t.kind != TokenKind::Attr) {
                error(line, t, "unexpected-token", "expected key=value selector");
                return;
            }
            if (!seen.insert(t.text).second) {
                error(line, t, "duplicate-attribute", "attribute '" + t.text + "' repeated");
                return;
            }
            if (t.text == "kind") {
                auto kind = kind_from(t.value);
                if (!kind) {
                    error(line, t, "malformed-attribute", "kind must be process, entity, store or flow");
                    return;
                }
                r.where.kind = *kind;
                have_kind = true;
            } else if (t.text == "direction") {
                auto d = direction_from(t.value);
                if (!d) {
                    error(line, t, "malformed-attribute", "direction must be inbound, outbound or any");
                    return;
                }
                r.where.direction = *d;
                have_direction = true;
                direction_tok = &t;
            } else if (t.text == "tag") {
                if (!is_tag(t.value)) {
                    error(line, t, "malformed-tag", "tag '" + t.value + "' is not valid");
                    return;
                }
                r.where.tag = t.value;
            } else if (t.text == "crossing") {
                if (!is_crossing_label(t.value)) {
                    error(line, t, "malformed-attribute", "crossing label '" + t.value + "' is not valid");
                    return;
                }
                r.where.crossing = t.value;
            } else if (t.text == "stride") {
                auto s = StrideSet::parse(t.value);
                if (!s) {
                    error(line, t, "malformed-stride", "stride must list letters from S,T,R,I,D,E");
                    return;
                }
                r.stride = *s;
            } else if (t.text == "note") {
                r.note = t.value;
                have_note = true;
            } else {
                error(line, t, "unknown-attribute", "unexpected selector '" + t.text + "'");
                return;
            }
        }
        if (!have_kind || !have_note) {
            error(line, *id, "missing-attribute", "rule needs kind= and note=");
            return;
        }
        if (have_direction && r.where.kind != TargetKind::DataFlow) {
            error(line, *direction_tok, "direction-on-element", "direction only applies to kind=flow");
            return;
        }
        if (std::any_of(catalog_.rules.begin(), catalog_.rules.end(),
                        [&](const ElicitationRule& x) { return x.rule_id == r.rule_id; })) {
            error(line, *id, "duplicate-declaration", "rule '" + r.rule_id + "' already declared");
            return;
        }
        entry_refs_.emplace_back(r.entry, SourceSpan{line.number, entry.column});
        catalog_.rules.push_back(std::move(r));
    }

    std::vector<LexedLine> lines_;
    std::optional<CatalogName> current_;
    Catalog catalog_;
    std::vector<std::pair<std::string, SourceSpan>> entry_refs_;
    std::vector<ParseError> errors_;
};

}  // namespace

ParseResult<Catalog> parse_catalog(std::string_view text) { return CatalogParser(text).run(); }

std::string serialize_catalog(const Catalog& catalog) {
    std::ostringstream os;
    std::optional<CatalogName> current;
    for (const auto& e : catalog.entries) {
        if (current != e.catalog) {
            os << "catalog " << to_string(e.catalog) << '\n';
            current = e.catalog;
        }
        os << "entry " << e.tech_id << ' ' << quote(e.name) << " category=" << to_string(e.category)
           << " stride=" << e.stride.to_string(',') << '\n';
    }
    for (const auto& r : catalog.rules) {
        os << "rule " << r.rule_id << " applies entry=" << r.entry << " where kind=" << to_string(r.where.kind);
        if (r.where.kind == TargetKind::DataFlow && r.where.direction != Direction::Any)
            os << " direction=" << to_string(r.where.direction);
        if (r.where.tag) os << " tag=" << *r.where.tag;
        if (r.where.crossing) os << " crossing=" << *r.where.crossing;
        if (r.stride) os << " stride=" << r.stride->to_string(',');
        os << " note=" << quote(r.note) << '\n';
    }
    return os.str();
}

}  // namespace crossway
