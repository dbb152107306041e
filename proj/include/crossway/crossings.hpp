#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crossway/model.hpp"

namespace crossway {

/// A boundary-crossing interaction point.
struct CrossingGroup {
    std::string label;
    std::string endpoint_a;
    std::string endpoint_b;
    /// Every endpoint pair contributing flows, oriented by the first flow of
    /// the pair. endpoint_a/endpoint_b repeat the first entry.
    std::vector<std::pair<std::string, std::string>> endpoint_pairs;
    std::vector<std::string> flows;               // declaration order
    std::vector<std::string> boundaries_crossed;  // boundary declaration order

    bool contains_flow(std::string_view flow_id) const;
    /// Elements touched by the group's flows, in model declaration order.
    std::vector<std::string> endpoints(const Model& model) const;

    friend bool operator==(const CrossingGroup&, const CrossingGroup&) = default;
};

struct CrossingResult {
    std::vector<CrossingGroup> groups;  // ordered by label
    std::vector<Diagnostic> diagnostics;
};

/// True if the flow takes part in crossing analysis: its endpoints sit on
/// different sides of some boundary, or it is an external flow carrying a
/// crossing label.
bool is_crossing_flow(const Model& model, const DataFlow& flow);

CrossingResult find_crossings(const Model& model);

/// Label of the group containing `flow_id`, or empty.
std::string crossing_label_of(const std::vector<CrossingGroup>& groups, std::string_view flow_id);

}  // namespace crossway
