#include "crossway/chains.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "crossway/ids.hpp"

namespace crossway {

namespace {

class TrailSearch {
public:
    TrailSearch(const Model& model, const std::vector<CrossingGroup>& crossings, std::size_t impact,
                std::size_t max_len)
        : model_(model), crossings_(crossings), impact_(impact), max_len_(max_len) {
        used_.assign(model.flows.size(), false);
        for (const DataFlow* f : analysis_flows(model)) {
            std::size_t idx = static_cast<std::size_t>(f - model.flows.data());
            outgoing_[f->source].push_back(idx);
        }
    }

    void run(const std::string& entry) { visit(entry); }

    std::vector<AttackChain> take() { return std::move(found_); }

private:
    void visit(const std::string& at) {
        auto it = outgoing_.find(at);
        if (it == outgoing_.end()) return;
        for (std::size_t idx : it->second) {
            if (used_[idx]) continue;
            if (idx == impact_) {
                path_.push_back(idx);
                record();
                path_.pop_back();
                continue;
            }
            // leave room for the impact flow
            if (path_.size() + 2 > max_len_) continue;
            used_[idx] = true;
            path_.push_back(idx);
            visit(model_.flows[idx].dest);
            path_.pop_back();
            used_[idx] = false;
        }
    }

    void record() {
        AttackChain chain;
        chain.impact_flow = model_.flows[impact_].id;
        std::set<std::string> written;
        for (std::size_t idx : path_) {
            const DataFlow& f = model_.flows[idx];
            chain.trail.push_back(f.id);
            const Element* dst = model_.find_element(f.dest);
            if (dst && dst->kind == ElementKind::DataStore) written.insert(dst->id);
        }
        for (const auto& e : model_.elements)
            if (written.count(e.id)) chain.persists_via.push_back(e.id);
        chain.crossing_sequence = crossing_sequence(crossings_, chain.trail);
        found_.push_back(std::move(chain));
    }

    const Model& model_;
    const std::vector<CrossingGroup>& crossings_;
    std::size_t impact_;
    std::size_t max_len_;
    std::map<std::string, std::vector<std::size_t>> outgoing_;
    std::vector<bool> used_;
    std::vector<std::size_t> path_;
    std::vector<AttackChain> found_;
};

}  // namespace

std::vector<std::string> crossing_sequence(const std::vector<CrossingGroup>& crossings,
                                           const std::vector<std::string>& trail) {
    std::vector<std::string> seq;
    for (const auto& flow : trail) {
        std::string label = crossing_label_of(crossings, flow);
        if (label.empty()) continue;
        if (seq.empty() || seq.back() != label) seq.push_back(std::move(label));
    }
    return seq;
}

std::vector<AttackChain> enumerate_chains(const Model& model, const std::vector<CrossingGroup>& crossings,
                                          std::string_view entry, std::string_view impact_flow,
                                          std::optional<std::size_t> max_len) {
    const Element* start = model.find_element(entry);
    if (!start) throw UnknownIdError(std::string(entry));
    if (start->kind != ElementKind::ExternalEntity)
        throw ChainQueryError("chain entry " + start->id + " is not an external entity");
    const DataFlow* impact = model.find_flow(impact_flow);
    if (!impact) throw UnknownIdError(std::string(impact_flow));
    const std::size_t limit = max_len.value_or(model.flows.size());
    if (limit == 0) throw ChainQueryError("max_len must be at least 1");

    TrailSearch search(model, crossings, static_cast<std::size_t>(impact - model.flows.data()), limit);
    search.run(start->id);
    auto chains = search.take();
    for (auto& c : chains) c.entry = start->id;
    std::sort(chains.begin(), chains.end(),
              [](const AttackChain& a, const AttackChain& b) { return natural_less(a.trail, b.trail); });
    return chains;
}

std::vector<AttackChain> enumerate_chains(const Model& model, std::string_view entry, std::string_view impact_flow,
                                          std::optional<std::size_t> max_len) {
    return enumerate_chains(model, find_crossings(model).groups, entry, impact_flow, max_len);
}

std::vector<std::string> persistence_flags(const AttackChain& chain, const Model& model) {
    std::vector<std::string> out;
    for (const auto& id : chain.persists_via) {
        const Element* e = model.find_element(id);
        if (e && e->kind == ElementKind::DataStore && e->has_tag(kContextStoreTag)) out.push_back(id);
    }
    return out;
}

bool is_valid_trail(const AttackChain& chain, const Model& model) {
    if (chain.trail.empty() || chain.trail.back() != chain.impact_flow) return false;
    std::set<std::string> seen;
    std::string at = chain.entry;
    for (const auto& id : chain.trail) {
        if (!seen.insert(id).second) return false;
        const DataFlow* f = model.find_flow(id);
        if (!f || f->source != at) return false;
        at = f->dest;
    }
    return true;
}

}  // namespace crossway
