#include "crossway/crossings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "crossway/ids.hpp"

namespace crossway {

bool CrossingGroup::contains_flow(std::string_view flow_id) const {
    return std::find(flows.begin(), flows.end(), flow_id) != flows.end();
}

std::vector<std::string> CrossingGroup::endpoints(const Model& model) const {
    std::set<std::string> ids;
    for (const auto& [a, b] : endpoint_pairs) {
        ids.insert(a);
        ids.insert(b);
    }
    std::vector<std::string> out;
    for (const auto& e : model.elements)
        if (ids.count(e.id)) out.push_back(e.id);
    return out;
}

bool is_crossing_flow(const Model& model, const DataFlow& flow) {
    if (!boundaries_crossed(model, flow).empty()) return true;
    return flow.external && flow.crossing_label.has_value();
}

namespace {

struct PairGroup {
    std::size_t lo = 0, hi = 0;  // element declaration indices
    std::vector<const DataFlow*> flows;
    std::optional<std::string> label;
};

}  // namespace

CrossingResult find_crossings(const Model& model) {
    CrossingResult result;

    std::vector<PairGroup> pairs;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;

    for (const DataFlow* flow : analysis_flows(model)) {
        if (!is_crossing_flow(model, *flow)) continue;
        std::size_t a = model.element_index(flow->source);
        std::size_t b = model.element_index(flow->dest);
        auto key = std::minmax(a, b);
        auto [it, inserted] = pair_index.try_emplace({key.first, key.second}, pairs.size());
        if (inserted) pairs.push_back(PairGroup{key.first, key.second, {}, {}});
        PairGroup& pg = pairs[it->second];
        pg.flows.push_back(flow);
        if (flow->crossing_label) {
            if (!pg.label) {
                pg.label = flow->crossing_label;
            } else if (*pg.label != *flow->crossing_label) {
                result.diagnostics.push_back(
                    {Severity::Error, "crossing-label-conflict",
                     "flow " + flow->id + " is labelled '" + *flow->crossing_label +
                         "' but its endpoint pair is already labelled '" + *pg.label + "'",
                     flow->id});
            }
        }
    }

    std::set<std::string> used_labels;
    for (const auto& pg : pairs)
        if (pg.label) used_labels.insert(*pg.label);

    // Unlabelled pairs get x1, x2, ... in endpoint declaration order.
    std::vector<std::size_t> unlabelled;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (!pairs[k].label) unlabelled.push_back(k);
    std::sort(unlabelled.begin(), unlabelled.end(), [&](std::size_t x, std::size_t y) {
        return std::tie(pairs[x].lo, pairs[x].hi) < std::tie(pairs[y].lo, pairs[y].hi);
    });
    int counter = 0;
    for (std::size_t k : unlabelled) {
        std::string label;
        do {
            label = "x" + std::to_string(++counter);
        } while (used_labels.count(label));
        used_labels.insert(label);
        pairs[k].label = label;
    }

    // Merge pair groups sharing a label; pair order follows first flow.
    std::map<std::string, std::vector<const PairGroup*>> by_label;
    for (const auto& pg : pairs) by_label[*pg.label].push_back(&pg);

    auto flow_pos = [&](const DataFlow* f) { return static_cast<std::size_t>(f - model.flows.data()); };

    for (auto& [label, members] : by_label) {
        std::sort(members.begin(), members.end(), [&](const PairGroup* x, const PairGroup* y) {
            return flow_pos(x->flows.front()) < flow_pos(y->flows.front());
        });
        CrossingGroup group;
        group.label = label;
        std::vector<const DataFlow*> flows;
        for (const PairGroup* pg : members) {
            group.endpoint_pairs.emplace_back(pg->flows.front()->source, pg->flows.front()->dest);
            flows.insert(flows.end(), pg->flows.begin(), pg->flows.end());
        }
        std::sort(flows.begin(), flows.end(), [&](const DataFlow* x, const DataFlow* y) {
            return flow_pos(x) < flow_pos(y);
        });
        std::set<std::string> crossed;
        for (const DataFlow* f : flows) {
            group.flows.push_back(f->id);
            for (const TrustBoundary* b : boundaries_crossed(model, *f)) crossed.insert(b->id);
        }
        for (const auto& b : model.boundaries)
            if (crossed.count(b.id)) group.boundaries_crossed.push_back(b.id);
        group.endpoint_a = group.endpoint_pairs.front().first;
        group.endpoint_b = group.endpoint_pairs.front().second;
        result.groups.push_back(std::move(group));
    }

    std::sort(result.groups.begin(), result.groups.end(),
              [](const CrossingGroup& x, const CrossingGroup& y) { return natural_less(x.label, y.label); });
    return result;
}

std::string crossing_label_of(const std::vector<CrossingGroup>& groups, std::string_view flow_id) {
    for (const auto& g : groups)
        if (g.contains_flow(flow_id)) return g.label;
    return {};
}

}  // namespace crossway
