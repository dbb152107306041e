#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crossway/stride.hpp"

namespace crossway {

enum class ElementKind { Process, ExternalEntity, DataStore };

/// Anything STRIDE applicability is defined for.
enum class TargetKind { ExternalEntity, Process, DataFlow, DataStore };

TargetKind target_kind(ElementKind kind);
std::string_view to_string(ElementKind kind);
std::string_view to_string(TargetKind kind);

struct Element {
    std::string id;
    std::string name;
    ElementKind kind = ElementKind::Process;
    std::set<std::string> tags;
    std::optional<std::string> parent;
    std::map<std::string, std::string> annotations;

    bool has_tag(std::string_view tag) const { return tags.find(std::string(tag)) != tags.end(); }
    friend bool operator==(const Element&, const Element&) = default;
};

struct DataFlow {
    std::string id;
    std::string source;
    std::string dest;
    std::string label;
    std::optional<std::string> crossing_label;
    bool external = false;
    std::set<std::string> tags;

    bool has_tag(std::string_view tag) const { return tags.find(std::string(tag)) != tags.end(); }
    friend bool operator==(const DataFlow&, const DataFlow&) = default;
};

struct TrustBoundary {
    std::string id;
    std::string name;
    std::vector<std::string> members;  // declaration order, no duplicates

    bool contains(std::string_view element_id) const;
    friend bool operator==(const TrustBoundary&, const TrustBoundary&) = default;
};

struct Model {
    std::string name;
    std::vector<Element> elements;
    std::vector<DataFlow> flows;
    std::vector<TrustBoundary> boundaries;

    const Element* find_element(std::string_view id) const;
    const DataFlow* find_flow(std::string_view id) const;
    const TrustBoundary* find_boundary(std::string_view id) const;
    /// Declaration index of an element, or npos.
    std::size_t element_index(std::string_view id) const;

    friend bool operator==(const Model&, const Model&) = default;
};

class UnknownIdError : public std::out_of_range {
public:
    explicit UnknownIdError(const std::string& id)
        : std::out_of_range("unknown id: " + id), id_(id) {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    std::string subject;
    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

bool has_errors(const std::vector<Diagnostic>& diags);
std::string format_diagnostic(const Diagnostic& d);

/// STRIDE-per-element applicability.
StrideSet stride_applicability(TargetKind kind);
inline StrideSet stride_applicability(ElementKind kind) { return stride_applicability(target_kind(kind)); }

enum class Side { Inside, Outside };

/// Throws UnknownIdError when the element is not declared.
Side side_of(const Model& model, std::string_view element_id, const TrustBoundary& boundary);

/// True if any element names `id` as its parent.
bool is_decomposed(const Model& model, std::string_view id);

/// Flows between finest-level elements; coarse (decomposed) elements and their
/// flows only exist for hierarchy balancing. Declaration order.
std::vector<const DataFlow*> analysis_flows(const Model& model);

/// Boundaries whose membership differs between the flow's endpoints.
std::vector<const TrustBoundary*> boundaries_crossed(const Model& model, const DataFlow& flow);

}  // namespace crossway
