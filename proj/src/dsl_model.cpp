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

const std::set<std::string> kModelKeywords = {"model", "entity", "process", "store", "boundary", "flow"};

struct Ref {
    std::string id;
    SourceSpan span;
    std::string what;
};

class ModelParser {
public:
    ModelParser(std::string_view text, ModelParseOptions options) : options_(options) {
        lines_ = detail::lex(text, errors_);
    }

    ParseResult<Model> run() {
        for (pos_ = 0; pos_ < lines_.size(); ++pos_) parse_line(lines_[pos_]);
        if (!have_model_ && errors_.empty())
            errors_.push_back(make_error(1, 1, "missing-model", "expected a `model \"<name>\"` declaration"));
        if (options_.check_references) check_references();

        ParseResult<Model> result;
        result.warnings = std::move(warnings_);
        result.errors = std::move(errors_);
        if (result.errors.empty()) result.value = std::move(model_);
        return result;
    }

private:
    void error(const LexedLine& line, const Token& tok, std::string code, std::string message) {
        errors_.push_back(make_error(line.number, tok.column, std::move(code), std::move(message)));
    }
    void error_at_end(const LexedLine& line, std::string code, std::string message) {
        const Token& last = line.tokens.back();
        errors_.push_back(make_error(line.number, last.column + static_cast<int>(last.text.size()), std::move(code),
                                     std::move(message)));
    }

    bool declare(const LexedLine& line, const Token& tok) {
        if (!declared_.insert(tok.text).second) {
            error(line, tok, "duplicate-declaration", "'" + tok.text + "' is already declared");
            return false;
        }
        return true;
    }

    const Token* expect(const LexedLine& line, std::size_t idx, TokenKind kind, const char* what) {
        if (idx >= line.tokens.size()) {
            error_at_end(line, "missing-token", std::string("expected ") + what);
            return nullptr;
        }
        const Token& t = line.tokens[idx];
        if (t.kind != kind) {
            error(line, t, "unexpected-token", std::string("expected ") + what);
            return nullptr;
        }
        return &t;
    }

    const Token* expect_id(const LexedLine& line, std::size_t idx, const char* what) {
        const Token* t = expect(line, idx, TokenKind::Word, what);
        if (t && !is_element_id(t->text)) {
            error(line, *t, "malformed-id", "'" + t->text + "' is not a valid id (letters followed by digits)");
            return nullptr;
        }
        return t;
    }

    void parse_line(const LexedLine& line) {
        const Token& head = line.tokens.front();
        if (head.kind != TokenKind::Word) {
            error(line, head, "unexpected-token", "expected a declaration keyword");
            return;
        }
        if (head.text == "model") return parse_model_decl(line);
        if (head.text == "entity") return parse_element(line, ElementKind::ExternalEntity);
        if (head.text == "process") return parse_element(line, ElementKind::Process);
        if (head.text == "store") return parse_element(line, ElementKind::DataStore);
        if (head.text == "boundary") return parse_boundary(line);
        if (head.text == "flow") return parse_flow(line);
        error(line, head, "unknown-keyword", "unknown keyword '" + head.text + "'");
    }

    void parse_model_decl(const LexedLine& line) {
        if (have_model_) {
            error(line, line.tokens.front(), "duplicate-declaration", "model declared twice");
            return;
        }
        const Token* name = expect(line, 1, TokenKind::String, "model name string");
        if (!name) return;
        if (line.tokens.size() > 2) {
            error(line, line.tokens[2], "unexpected-token", "unexpected token after model name");
            return;
        }
        have_model_ = true;
        model_.name = name->text;
    }

    bool parse_tags(const LexedLine& line, const Token& attr, std::set<std::string>& out) {
        std::vector<std::string> dups;
        auto tags = detail::split_tags(attr.value, dups);
        if (!tags) {
            error(line, attr, "malformed-tag", "tags must be lowercase [a-z0-9_.-], comma separated");
            return false;
        }
        for (const auto& d : dups)
            warnings_.push_back(make_error(line.number, attr.column, "duplicate-tag", "tag '" + d + "' repeated"));
        out.insert(tags->begin(), tags->end());
        return true;
    }

    void parse_element(const LexedLine& line, ElementKind kind) {
        const Token* id = expect_id(line, 1, "element id");
        if (!id) return;
        const Token* name = expect(line, 2, TokenKind::String, "element name string");
        if (!name) return;

        Element e;
        e.id = id->text;
        e.name = name->text;
        e.kind = kind;
        std::set<std::string> seen;
        for (std::size_t k = 3; k < line.tokens.size(); ++k) {
            const Token& t = line.tokens[k];
            if (t.kind != TokenKind::Attr) {
                error(line, t, "unexpected-token", "expected key=value attribute");
                return;
            }
            if (!seen.insert(t.text).second) {
                error(line, t, "duplicate-attribute", "attribute '" + t.text + "' repeated");
                return;
            }
            if (t.text == "tags") {
                if (!parse_tags(line, t, e.tags)) return;
            } else if (t.text == "parent" && kind != ElementKind::DataStore) {
                if (!is_element_id(t.value)) {
                    error(line, t, "malformed-id", "parent '" + t.value + "' is not a valid id");
                    return;
                }
                e.parent = t.value;
                refs_.push_back({t.value, {line.number, t.column}, "parent"});
            } else if (t.text == "audit_logging" && kind == ElementKind::Process) {
                if (t.value != "true" && t.value != "false") {
                    error(line, t, "malformed-attribute", "audit_logging must be true or false");
                    return;
                }
                e.annotations["audit_logging"] = t.value;
            } else {
                error(line, t, "unknown-attribute",
                      "attribute '" + t.text + "' is not allowed on " + std::string(to_string(kind)));
                return;
            }
        }
        if (!declare(line, *id)) return;
        model_.elements.push_back(std::move(e));
    }

    void parse_boundary(const LexedLine& line) {
        const Token* id = expect_id(line, 1, "boundary id");
        if (!id) return;
        const Token* name = expect(line, 2, TokenKind::String, "boundary name string");
        if (!name) return;
        if (!expect(line, 3, TokenKind::LBrace, "'{'")) return;

        TrustBoundary b;
        b.id = id->text;
        b.name = name->text;
        bool ok = true;
        bool closed = false;

        auto take_members = [&](const LexedLine& l, std::size_t from) {
            for (std::size_t k = from; k < l.tokens.size(); ++k) {
                const Token& t = l.tokens[k];
                if (closed) {
                    error(l, t, "unexpected-token", "unexpected token after '}'");
                    ok = false;
                    return;
                }
                if (t.kind == TokenKind::RBrace) {
                    closed = true;
                    continue;
                }
                if (t.kind != TokenKind::Word || !is_element_id(t.text)) {
                    error(l, t, "malformed-id", "boundary member '" + t.text + "' is not a valid id");
                    ok = false;
                    continue;
                }
                if (b.contains(t.text)) {
                    error(l, t, "duplicate-member", "'" + t.text + "' listed twice in " + b.id);
                    ok = false;
                    continue;
                }
                b.members.push_back(t.text);
                refs_.push_back({t.text, {l.number, t.column}, "boundary member"});
            }
        };

        take_members(line, 4);
        while (!closed) {
            if (pos_ + 1 >= lines_.size()) break;
            const LexedLine& next = lines_[pos_ + 1];
            const Token& head = next.tokens.front();
            if (head.kind == TokenKind::Word && kModelKeywords.count(head.text)) break;
            ++pos_;
            take_members(next, 0);
        }
        if (!closed) {
            error(line, line.tokens.front(), "unterminated-boundary", "boundary " + b.id + " is missing '}'");
            return;
        }
        if (!ok || !declare(line, *id)) return;
        model_.boundaries.push_back(std::move(b));
    }

    void parse_flow(const LexedLine& line) {
        const Token* id = expect_id(line, 1, "flow id");
        if (!id) return;
        const Token* src = expect_id(line, 2, "source id");
        if (!src) return;
        if (!expect(line, 3, TokenKind::Arrow, "'->'")) return;
        const Token* dst = expect_id(line, 4, "destination id");
        if (!dst) return;
        const Token* label = expect(line, 5, TokenKind::String, "flow label string");
        if (!label) return;

        DataFlow f;
        f.id = id->text;
        f.source = src->text;
        f.dest = dst->text;
        f.label = label->text;
        std::set<std::string> seen;
        for (std::size_t k = 6; k < line.tokens.size(); ++k) {
            const Token& t = line.tokens[k];
            if (t.kind == TokenKind::Word && t.text == "external") {
                if (f.external) {
                    error(line, t, "duplicate-attribute", "'external' repeated");
                    return;
                }
                f.external = true;
                continue;
            }
            if (t.kind != TokenKind::Attr) {
                error(line, t, "unexpected-token", "expected key=value attribute or 'external'");
                return;
            }
            if (!seen.insert(t.text).second) {
                error(line, t, "duplicate-attribute", "attribute '" + t.text + "' repeated");
                return;
            }
            if (t.text == "crossing") {
                if (!is_crossing_label(t.value)) {
                    error(line, t, "malformed-attribute", "crossing label '" + t.value + "' is not valid");
                    return;
                }
                f.crossing_label = t.value;
            } else if (t.text == "tags") {
                if (!parse_tags(line, t, f.tags)) return;
            } else {
                error(line, t, "unknown-attribute", "attribute '" + t.text + "' is not allowed on flow");
                return;
            }
        }
        refs_.push_back({f.source, {line.number, src->column}, "flow source"});
        refs_.push_back({f.dest, {line.number, dst->column}, "flow destination"});
        if (!declare(line, *id)) return;
        model_.flows.push_back(std::move(f));
    }

    void check_references() {
        for (const auto& r : refs_) {
            if (model_.find_element(r.id)) continue;
            errors_.push_back(ParseError{r.span, "undeclared-reference", r.what + " '" + r.id + "' is not a declared element"});
        }
    }

    ModelParseOptions options_;
    std::vector<LexedLine> lines_;
    std::size_t pos_ = 0;
    Model model_;
    bool have_model_ = false;
    std::set<std::string> declared_;
    std::vector<Ref> refs_;
    std::vector<ParseError> errors_;
    std::vector<ParseError> warnings_;
};

std::string join_tags(const std::set<std::string>& tags) {
    std::string out;
    for (const auto& t : tags) out += (out.empty() ? "" : ",") + t;
    return out;
}

}  // namespace

ParseResult<Model> parse_model(std::string_view text, ModelParseOptions options) {
    return ModelParser(text, options).run();
}

std::string serialize_model(const Model& model) {
    std::ostringstream os;
    os << "model " << quote(model.name) << '\n';
    for (const auto& e : model.elements) {
        os << to_string(e.kind) << ' ' << e.id << ' ' << quote(e.name);
        if (!e.tags.empty()) os << " tags=" << join_tags(e.tags);
        if (e.parent && e.kind != ElementKind::DataStore) os << " parent=" << *e.parent;
        if (e.kind == ElementKind::Process) {
            auto it = e.annotations.find("audit_logging");
            if (it != e.annotations.end()) os << " audit_logging=" << it->second;
        }
        os << '\n';
    }
    for (const auto& b : model.boundaries) {
        os << "boundary " << b.id << ' ' << quote(b.name) << " {";
        for (const auto& m : b.members) os << ' ' << m;
        os << " }\n";
    }
    for (const auto& f : model.flows) {
        os << "flow " << f.id << ' ' << f.source << " -> " << f.dest << ' ' << quote(f.label);
        if (f.crossing_label) os << " crossing=" << *f.crossing_label;
        if (f.external) os << " external";
        if (!f.tags.empty()) os << " tags=" << join_tags(f.tags);
        os << '\n';
    }
    return os.str();
}

}  // namespace crossway
