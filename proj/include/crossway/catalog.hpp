#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crossway/crossings.hpp"
#include "crossway/model.hpp"
#include "crossway/stride.hpp"

namespace crossway {

enum class CatalogName { Attack, Atlas, OwaspLlm };
enum class ThreatCategory { CCT, AdvT, ConT };

std::string_view to_string(CatalogName name);
std::string_view to_string(ThreatCategory category);
std::optional<CatalogName> catalog_name_from(std::string_view text);
std::optional<ThreatCategory> category_from(std::string_view text);

struct CatalogEntry {
    std::string tech_id;
    std::string name;
    CatalogName catalog = CatalogName::Attack;
    ThreatCategory category = ThreatCategory::CCT;
    StrideSet stride;
    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

enum class Direction { Any, Inbound, Outbound };
std::string_view to_string(Direction d);

struct RuleSelector {
    TargetKind kind = TargetKind::DataFlow;
    Direction direction = Direction::Any;  // flow selectors only
    std::optional<std::string> tag;
    std::optional<std::string> crossing;
    friend bool operator==(const RuleSelector&, const RuleSelector&) = default;
};

struct ElicitationRule {
    std::string rule_id;
    std::string entry;  // tech_id
    RuleSelector where;
    /// Optional narrowing of the entry's letters for this rule; never widens.
    std::optional<StrideSet> stride;
    std::string note;
    friend bool operator==(const ElicitationRule&, const ElicitationRule&) = default;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    std::vector<ElicitationRule> rules;
    friend bool operator==(const Catalog&, const Catalog&) = default;
};

class UnknownTechniqueError : public std::out_of_range {
public:
    explicit UnknownTechniqueError(const std::string& id) : std::out_of_range("unknown technique id: " + id) {}
};

/// Exact-match lookup; throws UnknownTechniqueError.
const CatalogEntry& lookup(const std::vector<CatalogEntry>& entries, std::string_view tech_id);
const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, std::string_view tech_id);

struct RuleMatch {
    std::string rule_id;
    std::string tech_id;
    std::string target;
    TargetKind target_kind = TargetKind::DataFlow;
    StrideSet letters;
    friend bool operator==(const RuleMatch&, const RuleMatch&) = default;
};

/// Flow direction relative to the boundaries it crosses. A flow crossing two
/// boundaries (e.g. TB1 -> TB2) is both outbound and inbound.
bool is_inbound(const Model& model, const DataFlow& flow);
bool is_outbound(const Model& model, const DataFlow& flow);

/// Matches every rule against the crossing's flows and endpoint elements.
/// Letters are entry.stride, narrowed by the rule, intersected with the
/// target's STRIDE applicability; an empty intersection is no match.
/// Ordered by (target id, tech_id, rule id).
std::vector<RuleMatch> match_rules(const Catalog& catalog, const Model& model, const CrossingGroup& crossing);

}  // namespace crossway
