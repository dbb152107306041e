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

struct Pending {
    TreeNode node;
    int level = 0;
    SourceSpan span;
};

std::optional<TreeNode> parse_node(const LexedLine& line, std::vector<ParseError>& errors) {
    const Token& head = line.tokens.front();
    auto fail = [&](const Token& t, std::string code, std::string msg) {
        errors.push_back(make_error(line.number, t.column, std::move(code), std::move(msg)));
        return std::nullopt;
    };
    if (head.kind != TokenKind::Word) return fail(head, "unexpected-token", "expected AND, OR or LEAF");

    TreeNode node;
    std::size_t next = 1;
    if (head.text == "AND" || head.text == "OR") {
        node.type = head.text == "AND" ? NodeType::And : NodeType::Or;
    } else if (head.text == "LEAF") {
        node.type = NodeType::Leaf;
        if (line.tokens.size() < 2 || line.tokens[1].kind != TokenKind::Word || !is_identifier(line.tokens[1].text))
            return fail(line.tokens.size() < 2 ? head : line.tokens[1], "malformed-id", "expected leaf id");
        node.leaf_id = line.tokens[1].text;
        next = 2;
    } else {
        return fail(head, "unknown-keyword", "unknown node type '" + head.text + "'");
    }
    if (next >= line.tokens.size() || line.tokens[next].kind != TokenKind::String)
        return fail(next < line.tokens.size() ? line.tokens[next] : head, "unexpected-token", "expected label string");
    node.label = line.tokens[next].text;
    for (std::size_t k = next + 1; k < line.tokens.size(); ++k) {
        const Token& t = line.tokens[k];
        if (node.type == NodeType::Leaf && t.kind == TokenKind::Attr && t.text == "ref" && !node.ref) {
            if (!is_identifier(t.value)) return fail(t, "malformed-id", "ref must be a technique id");
            node.ref = t.value;
            continue;
        }
        return fail(t, "unexpected-token", "unexpected token '" + t.text + "'");
    }
    return node;
}

void write_node(std::ostringstream& os, const TreeNode& node, int level) {
    os << std::string(static_cast<std::size_t>(level) * 2, ' ');
    switch (node.type) {
        case NodeType::And: os << "AND " << quote(node.label); break;
        case NodeType::Or: os << "OR " << quote(node.label); break;
        case NodeType::Leaf:
            os << "LEAF " << node.leaf_id << ' ' << quote(node.label);
            if (node.ref) os << " ref=" << *node.ref;
            break;
    }
    os << '\n';
    for (const auto& c : node.children) write_node(os, c, level + 1);
}

}  // namespace

ParseResult<AttackTree> parse_tree(std::string_view text) {
    ParseResult<AttackTree> result;
    auto lines = detail::lex(text, result.errors);

    // stack[k] is the open node at level k
    std::vector<Pending> stack;
    std::optional<TreeNode> root;
    bool extra_root = false;

    auto close_to = [&](int level) {
        while (static_cast<int>(stack.size()) > level) {
            Pending done = std::move(stack.back());
            stack.pop_back();
            if (done.node.is_gate() && done.node.children.empty())
                result.errors.push_back(ParseError{done.span, "empty-gate", "gate has no children"});
            if (stack.empty())
                root = std::move(done.node);
            else
                stack.back().node.children.push_back(std::move(done.node));
        }
    };

    for (const auto& line : lines) {
        const int col = line.indent + 1;
        if (line.has_tab_indent) {
            result.errors.push_back(make_error(line.number, 1, "bad-indent", "tabs are not allowed in indentation"));
            continue;
        }
        if (line.indent % 2 != 0) {
            result.errors.push_back(make_error(line.number, col, "bad-indent", "indentation must be a multiple of 2 spaces"));
            continue;
        }
        const int level = line.indent / 2;
        auto node = parse_node(line, result.errors);
        if (!node) continue;

        if (level == 0 && (root || !stack.empty())) {
            close_to(0);
            if (!extra_root)
                result.errors.push_back(make_error(line.number, col, "multiple-roots", "tree has more than one root"));
            extra_root = true;
            continue;
        }
        if (level > static_cast<int>(stack.size())) {
            result.errors.push_back(make_error(line.number, col, "bad-indent", "indentation jumps more than one level"));
            continue;
        }
        close_to(level);
        if (level > 0 && stack.back().node.type == NodeType::Leaf) {
            result.errors.push_back(make_error(line.number, col, "leaf-with-children", "LEAF " + stack.back().node.leaf_id + " cannot have children"));
            continue;
        }
        stack.push_back({std::move(*node), level, {line.number, col}});
    }
    close_to(0);

    if (!root && result.errors.empty())
        result.errors.push_back(make_error(1, 1, "empty-tree", "tree file has no nodes"));
    if (result.errors.empty()) result.value = AttackTree{std::move(*root)};
    return result;
}

std::string serialize_tree(const AttackTree& tree) {
    std::ostringstream os;
    write_node(os, tree.root, 0);
    return os.str();
}

}  // namespace crossway
