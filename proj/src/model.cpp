#include "crossway/model.hpp"

#include <algorithm>

namespace crossway {

TargetKind target_kind(ElementKind kind) {
    switch (kind) {
        case ElementKind::Process: return TargetKind::Process;
        case ElementKind::ExternalEntity: return TargetKind::ExternalEntity;
        case ElementKind::DataStore: return TargetKind::DataStore;
    }
    return TargetKind::Process;
}

std::string_view to_string(ElementKind kind) {
    switch (kind) {
        case ElementKind::Process: return "process";
        case ElementKind::ExternalEntity: return "entity";
        case ElementKind::DataStore: return "store";
    }
    return "process";
}

std::string_view to_string(TargetKind kind) {
    switch (kind) {
        case TargetKind::ExternalEntity: return "entity";
        case TargetKind::Process: return "process";
        case TargetKind::DataFlow: return "flow";
        case TargetKind::DataStore: return "store";
    }
    return "process";
}

bool TrustBoundary::contains(std::string_view element_id) const {
    return std::find(members.begin(), members.end(), element_id) != members.end();
}

const Element* Model::find_element(std::string_view id) const {
    auto it = std::find_if(elements.begin(), elements.end(), [&](const Element& e) { return e.id == id; });
    return it == elements.end() ? nullptr : &*it;
}

const DataFlow* Model::find_flow(std::string_view id) const {
    auto it = std::find_if(flows.begin(), flows.end(), [&](const DataFlow& f) { return f.id == id; });
    return it == flows.end() ? nullptr : &*it;
}

const TrustBoundary* Model::find_boundary(std::string_view id) const {
    auto it = std::find_if(boundaries.begin(), boundaries.end(), [&](const TrustBoundary& b) { return b.id == id; });
    return it == boundaries.end() ? nullptr : &*it;
}

std::size_t Model::element_index(std::string_view id) const {
    for (std::size_t k = 0; k < elements.size(); ++k)
        if (elements[k].id == id) return k;
    return static_cast<std::size_t>(-1);
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string format_diagnostic(const Diagnostic& d) {
    std::string out = d.severity == Severity::Error ? "error" : "warning";
    out += "[" + d.code + "]";
    if (!d.subject.empty()) out += " " + d.subject;
    out += ": " + d.message;
    return out;
}

StrideSet stride_applicability(TargetKind kind) {
    using enum Stride;
    switch (kind) {
        case TargetKind::ExternalEntity: return {S, R};
        case TargetKind::Process: return {S, T, R, I, D, E};
        case TargetKind::DataFlow: return {T, I, D};
        case TargetKind::DataStore: return {T, R, I, D};
    }
    return {};
}

Side side_of(const Model& model, std::string_view element_id, const TrustBoundary& boundary) {
    if (!model.find_element(element_id)) throw UnknownIdError(std::string(element_id));
    return boundary.contains(element_id) ? Side::Inside : Side::Outside;
}

bool is_decomposed(const Model& model, std::string_view id) {
    return std::any_of(model.elements.begin(), model.elements.end(),
                       [&](const Element& e) { return e.parent && *e.parent == id; });
}

std::vector<const DataFlow*> analysis_flows(const Model& model) {
    std::set<std::string> coarse;
    for (const auto& e : model.elements)
        if (e.parent) coarse.insert(*e.parent);
    std::vector<const DataFlow*> out;
    for (const auto& f : model.flows)
        if (!coarse.count(f.source) && !coarse.count(f.dest)) out.push_back(&f);
    return out;
}

std::vector<const TrustBoundary*> boundaries_crossed(const Model& model, const DataFlow& flow) {
    std::vector<const TrustBoundary*> out;
    for (const auto& b : model.boundaries)
        if (b.contains(flow.source) != b.contains(flow.dest)) out.push_back(&b);
    return out;
}

}  // namespace crossway
