#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossway {

enum class NodeType { And, Or, Leaf };

/// AND/OR gate or a leaf event. Leaves sharing an id denote the same event.
struct TreeNode {
    NodeType type = NodeType::Leaf;
    std::string label;
    std::string leaf_id;             // leaves only
    std::optional<std::string> ref;  // catalog tech_id, leaves only
    std::vector<TreeNode> children;  // gates only, at least one

    bool is_gate() const { return type != NodeType::Leaf; }
    friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct AttackTree {
    TreeNode root;
    friend bool operator==(const AttackTree&, const AttackTree&) = default;
};

using LeafSet = std::vector<std::string>;  // naturally sorted leaf ids

class MissingLeafError : public std::invalid_argument {
public:
    explicit MissingLeafError(const std::string& id)
        : std::invalid_argument("no truth value for leaf " + id), id_(id) {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

/// Distinct leaf ids, naturally sorted.
std::vector<std::string> leaf_ids(const AttackTree& tree);
std::size_t gate_count(const AttackTree& tree);
std::size_t leaf_node_count(const AttackTree& tree);
std::size_t depth(const AttackTree& tree);

/// Throws MissingLeafError if any leaf lacks an assignment.
bool tree_evaluate(const AttackTree& tree, const std::map<std::string, bool>& truth);

/// Minimal leaf sets satisfying the root, sorted by (size, lexicographic).
/// Supports up to 64 distinct leaves.
std::vector<LeafSet> minimal_cut_sets(const AttackTree& tree);

}  // namespace crossway
