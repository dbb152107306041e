#include "crossway/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "crossway/crossings.hpp"
#include "crossway/ids.hpp"

namespace crossway {

namespace {

class Collector {
public:
    void error(std::string code, std::string subject, std::string message) {
        out.push_back({Severity::Error, std::move(code), std::move(message), std::move(subject)});
    }
    void warning(std::string code, std::string subject, std::string message) {
        out.push_back({Severity::Warning, std::move(code), std::move(message), std::move(subject)});
    }
    std::vector<Diagnostic> out;
};

void check_ids(const Model& model, Collector& c) {
    std::map<std::string, int> seen;
    for (const auto& e : model.elements) ++seen[e.id];
    for (const auto& f : model.flows) ++seen[f.id];
    for (const auto& b : model.boundaries) ++seen[b.id];
    for (const auto& [id, n] : seen)
        if (n > 1) c.error("duplicate-id", id, "id declared " + std::to_string(n) + " times");
}

/// Ancestors of `id`, nearest first. Stops on cycles or dangling parents.
std::vector<std::string> ancestors(const Model& model, const std::string& id) {
    std::vector<std::string> chain;
    const Element* e = model.find_element(id);
    while (e && e->parent) {
        if (std::find(chain.begin(), chain.end(), *e->parent) != chain.end() || *e->parent == id) break;
        chain.push_back(*e->parent);
        e = model.find_element(*e->parent);
    }
    return chain;
}

void check_hierarchy(const Model& model, Collector& c) {
    for (const auto& e : model.elements) {
        if (!e.parent) continue;
        const Element* parent = model.find_element(*e.parent);
        if (!parent) {
            c.error("dangling-parent", e.id, "parent " + *e.parent + " is not declared");
            continue;
        }
        if (parent->kind != ElementKind::Process)
            c.error("parent-not-process", e.id, "parent " + *e.parent + " is not a process");
        // walk up; a repeat means a cycle
        std::set<std::string> visited{e.id};
        const Element* cur = parent;
        while (cur) {
            if (!visited.insert(cur->id).second) {
                c.error("hierarchy-cycle", e.id, "parent chain loops back through " + cur->id);
                break;
            }
            cur = cur->parent ? model.find_element(*cur->parent) : nullptr;
        }
    }
}

bool descends_from(const Model& model, const std::string& id, const std::string& ancestor) {
    auto chain = ancestors(model, id);
    return std::find(chain.begin(), chain.end(), ancestor) != chain.end();
}

bool has_flow(const Model& model, const std::string& src, const std::vector<std::string>& dests) {
    return std::any_of(model.flows.begin(), model.flows.end(), [&](const DataFlow& f) {
        return f.source == src && std::find(dests.begin(), dests.end(), f.dest) != dests.end();
    });
}

bool has_flow_into(const Model& model, const std::vector<std::string>& sources, const std::string& dst) {
    return std::any_of(model.flows.begin(), model.flows.end(), [&](const DataFlow& f) {
        return f.dest == dst && std::find(sources.begin(), sources.end(), f.source) != sources.end();
    });
}

// A flow leaving a decomposed process's children must be mirrored by a flow
// at the parent's level. Stores are local to a decomposition and exempt.
void check_balance(const Model& model, const DataFlow& f, Collector& c) {
    const Element* src = model.find_element(f.source);
    const Element* dst = model.find_element(f.dest);
    if (!src || !dst) return;
    if (src->kind == ElementKind::DataStore || dst->kind == ElementKind::DataStore) return;

    auto self_and_up = [&](const std::string& id) {
        std::vector<std::string> v{id};
        auto up = ancestors(model, id);
        v.insert(v.end(), up.begin(), up.end());
        return v;
    };

    if (src->parent && !descends_from(model, dst->id, *src->parent) &&
        !has_flow(model, *src->parent, self_and_up(dst->id))) {
        c.error("hierarchy-imbalance", f.id,
                "no flow from " + *src->parent + " mirrors " + f.source + " -> " + f.dest);
        return;
    }
    if (dst->parent && !descends_from(model, src->id, *dst->parent) &&
        !has_flow_into(model, self_and_up(src->id), *dst->parent)) {
        c.error("hierarchy-imbalance", f.id,
                "no flow into " + *dst->parent + " mirrors " + f.source + " -> " + f.dest);
    }
}

void check_flows(const Model& model, Collector& c) {
    for (const auto& f : model.flows) {
        const Element* src = model.find_element(f.source);
        const Element* dst = model.find_element(f.dest);
        if (!src) c.error("dangling-endpoint", f.id, "source " + f.source + " is not declared");
        if (!dst) c.error("dangling-endpoint", f.id, "destination " + f.dest + " is not declared");
        if (f.source == f.dest) c.error("self-flow", f.id, "source and destination are both " + f.source);
        if (!src || !dst) continue;

        if (src->kind == ElementKind::DataStore && dst->kind == ElementKind::DataStore)
            c.error("store-to-store", f.id, "flows between data stores must pass through a process");
        if (src->kind == ElementKind::ExternalEntity && dst->kind == ElementKind::ExternalEntity && !f.external)
            c.warning("entity-flow-not-external", f.id, "flow between external entities is not marked external");
        if (f.crossing_label && !f.external && boundaries_crossed(model, f).empty())
            c.warning("label-without-crossing", f.id,
                      "crossing label '" + *f.crossing_label + "' on a flow that crosses no boundary");
        check_balance(model, f, c);
    }
}

void check_boundaries(const Model& model, Collector& c) {
    std::map<std::string, std::vector<std::string>> membership;
    for (const auto& b : model.boundaries) {
        for (const auto& m : b.members) {
            const Element* e = model.find_element(m);
            if (!e) {
                c.error("dangling-member", b.id, "member " + m + " is not declared");
                continue;
            }
            if (e->kind == ElementKind::ExternalEntity)
                c.error("entity-in-boundary", m, "external entity placed inside " + b.id);
            membership[m].push_back(b.id);
        }
    }
    for (const auto& [id, bs] : membership) {
        if (bs.size() < 2) continue;
        std::string list;
        for (const auto& b : bs) list += (list.empty() ? "" : ", ") + b;
        c.error("multiple-boundaries", id, "element belongs to more than one boundary: " + list);
    }
}

void check_isolated(const Model& model, Collector& c) {
    std::set<std::string> touched;
    for (const auto& f : model.flows) {
        touched.insert(f.source);
        touched.insert(f.dest);
    }
    for (const auto& e : model.elements)
        if (!touched.count(e.id)) c.warning("isolated-element", e.id, "element has no flows");
}

}  // namespace

std::vector<Diagnostic> validate_model(const Model& model) {
    Collector c;
    check_ids(model, c);
    check_hierarchy(model, c);
    check_flows(model, c);
    check_boundaries(model, c);
    check_isolated(model, c);
    for (auto& d : find_crossings(model).diagnostics) c.out.push_back(std::move(d));

    std::stable_sort(c.out.begin(), c.out.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (int cmp = natural_compare(a.subject, b.subject); cmp != 0) return cmp < 0;
        return a.code < b.code;
    });
    return c.out;
}

}  // namespace crossway
