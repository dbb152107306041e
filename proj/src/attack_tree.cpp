#include "crossway/attack_tree.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "crossway/ids.hpp"

namespace crossway {

namespace {

void collect_leaves(const TreeNode& node, std::set<std::string>& out) {
    if (node.type == NodeType::Leaf) {
        out.insert(node.leaf_id);
        return;
    }
    for (const auto& c : node.children) collect_leaves(c, out);
}

std::size_t count_if_node(const TreeNode& node, bool gates) {
    std::size_t n = (node.is_gate() == gates) ? 1 : 0;
    for (const auto& c : node.children) n += count_if_node(c, gates);
    return n;
}

std::size_t depth_of(const TreeNode& node) {
    std::size_t d = 0;
    for (const auto& c : node.children) d = std::max(d, depth_of(c) + 1);
    return d;
}

bool eval(const TreeNode& node, const std::map<std::string, bool>& truth) {
    switch (node.type) {
        case NodeType::Leaf: {
            auto it = truth.find(node.leaf_id);
            if (it == truth.end()) throw MissingLeafError(node.leaf_id);
            return it->second;
        }
        case NodeType::And: {
            bool all = true;
            for (const auto& c : node.children) all = eval(c, truth) && all;
            return all;
        }
        case NodeType::Or: {
            bool any = false;
            for (const auto& c : node.children) any = eval(c, truth) || any;
            return any;
        }
    }
    return false;
}

using Mask = std::uint64_t;

std::vector<Mask> minimise(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Mask> kept;
    for (Mask s : sets) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](Mask k) { return (k & s) == k; });
        if (!dominated) kept.push_back(s);
    }
    return kept;
}

std::vector<Mask> cuts(const TreeNode& node, const std::vector<std::string>& ids) {
    if (node.type == NodeType::Leaf) {
        auto pos = std::lower_bound(ids.begin(), ids.end(), node.leaf_id,
                                    [](const std::string& a, const std::string& b) { return natural_less(a, b); });
        return {Mask{1} << static_cast<unsigned>(pos - ids.begin())};
    }
    std::vector<Mask> acc;
    if (node.type == NodeType::Or) {
        for (const auto& c : node.children) {
            auto sub = cuts(c, ids);
            acc.insert(acc.end(), sub.begin(), sub.end());
        }
        return minimise(std::move(acc));
    }
    acc.push_back(0);
    for (const auto& c : node.children) {
        auto sub = cuts(c, ids);
        std::vector<Mask> next;
        next.reserve(acc.size() * sub.size());
        for (Mask a : acc)
            for (Mask b : sub) next.push_back(a | b);
        acc = minimise(std::move(next));
    }
    return acc;
}

}  // namespace

std::vector<std::string> leaf_ids(const AttackTree& tree) {
    std::set<std::string> s;
    collect_leaves(tree.root, s);
    std::vector<std::string> out(s.begin(), s.end());
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
    return out;
}

std::size_t gate_count(const AttackTree& tree) { return count_if_node(tree.root, true); }
std::size_t leaf_node_count(const AttackTree& tree) { return count_if_node(tree.root, false); }
std::size_t depth(const AttackTree& tree) { return depth_of(tree.root); }

bool tree_evaluate(const AttackTree& tree, const std::map<std::string, bool>& truth) {
    for (const auto& id : leaf_ids(tree))
        if (!truth.count(id)) throw MissingLeafError(id);
    return eval(tree.root, truth);
}

std::vector<LeafSet> minimal_cut_sets(const AttackTree& tree) {
    const auto ids = leaf_ids(tree);
    if (ids.size() > 64) throw std::length_error("minimal_cut_sets supports at most 64 distinct leaves");
    std::vector<LeafSet> out;
    for (Mask m : cuts(tree.root, ids)) {
        LeafSet set;
        for (std::size_t k = 0; k < ids.size(); ++k)
            if (m & (Mask{1} << k)) set.push_back(ids[k]);
        out.push_back(std::move(set));
    }
    std::sort(out.begin(), out.end(), [](const LeafSet& a, const LeafSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return natural_less(a, b);
    });
    return out;
}

}  // namespace crossway
