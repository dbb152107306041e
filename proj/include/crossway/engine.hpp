#pragma once

#include <string>
#include <vector>

#include "crossway/catalog.hpp"
#include "crossway/crossings.hpp"
#include "crossway/model.hpp"

namespace crossway {

inline constexpr const char* kModelScope = "model";
inline constexpr const char* kRepudiationTechnique = "T1070";
/// Entities carrying this tag deliver content without signed provenance.
inline constexpr const char* kUnsignedOutputTag = "unsigned-output";

struct Threat {
    std::string threat_id;
    std::string crossing;  // crossing label, or "model"
    std::string target;    // flow/element id, or "model"
    TargetKind target_kind = TargetKind::DataFlow;
    StrideSet stride;
    ThreatCategory category = ThreatCategory::CCT;
    std::string tech_id;
    std::string finding;
    std::vector<std::string> rule_ids;
    std::vector<std::string> subjects;  // model-scoped findings only

    bool model_scoped() const { return target == kModelScope; }
    friend bool operator==(const Threat&, const Threat&) = default;
};

/// "TH-<crossing>-<8 hex digits>", derived from (crossing, target, tech_id).
std::string make_threat_id(std::string_view crossing, std::string_view target, std::string_view tech_id);

/// STRIDE-per-interaction over the given crossings. One Threat per
/// (crossing, target, entry); ordered by (crossing label, target, tech_id).
std::vector<Threat> elicit(const Model& model, const Catalog& catalog, const std::vector<CrossingGroup>& crossings);
std::vector<Threat> elicit(const Model& model, const Catalog& catalog);

/// Single model-wide repudiation finding: processes without
/// audit_logging=true plus entities tagged unsigned-output. Empty when there
/// is nothing to report or the catalog lacks T1070.
std::vector<Threat> consolidate_repudiation(const Model& model, const Catalog& catalog);

/// Letters within STRIDE applicability of the target (or, for model-scoped
/// threats, of every subject).
bool is_applicable(const Threat& threat, const Model& model);

struct ElicitationReport {
    std::string model_name;
    std::vector<CrossingGroup> crossings;
    std::vector<Threat> threats;  // per-crossing threats, then model-scoped
};

ElicitationReport analyze(const Model& model, const Catalog& catalog);

}  // namespace crossway
