#include "crossway/catalog.hpp"

#include <algorithm>

#include "crossway/ids.hpp"

namespace crossway {

std::string_view to_string(CatalogName name) {
    switch (name) {
        case CatalogName::Attack: return "ATTACK";
        case CatalogName::Atlas: return "ATLAS";
        case CatalogName::OwaspLlm: return "OWASP_LLM";
    }
    return "ATTACK";
}

std::string_view to_string(ThreatCategory category) {
    switch (category) {
        case ThreatCategory::CCT: return "CCT";
        case ThreatCategory::AdvT: return "AdvT";
        case ThreatCategory::ConT: return "ConT";
    }
    return "CCT";
}

std::optional<CatalogName> catalog_name_from(std::string_view text) {
    if (text == "ATTACK") return CatalogName::Attack;
    if (text == "ATLAS") return CatalogName::Atlas;
    if (text == "OWASP_LLM") return CatalogName::OwaspLlm;
    return std::nullopt;
}

std::optional<ThreatCategory> category_from(std::string_view text) {
    if (text == "CCT") return ThreatCategory::CCT;
    if (text == "AdvT") return ThreatCategory::AdvT;
    if (text == "ConT") return ThreatCategory::ConT;
    return std::nullopt;
}

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::Any: return "any";
        case Direction::Inbound: return "inbound";
        case Direction::Outbound: return "outbound";
    }
    return "any";
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, std::string_view tech_id) {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.tech_id == tech_id; });
    return it == entries.end() ? nullptr : &*it;
}

const CatalogEntry& lookup(const std::vector<CatalogEntry>& entries, std::string_view tech_id) {
    if (const CatalogEntry* e = find_entry(entries, tech_id)) return *e;
    throw UnknownTechniqueError(std::string(tech_id));
}

bool is_inbound(const Model& model, const DataFlow& flow) {
    return std::any_of(model.boundaries.begin(), model.boundaries.end(), [&](const TrustBoundary& b) {
        return b.contains(flow.dest) && !b.contains(flow.source);
    });
}

bool is_outbound(const Model& model, const DataFlow& flow) {
    return std::any_of(model.boundaries.begin(), model.boundaries.end(), [&](const TrustBoundary& b) {
        return b.contains(flow.source) && !b.contains(flow.dest);
    });
}

namespace {

bool label_ok(const RuleSelector& sel, const CrossingGroup& crossing) {
    return !sel.crossing || *sel.crossing == crossing.label;
}

std::optional<StrideSet> letters_for(const CatalogEntry& entry, const ElicitationRule& rule, TargetKind kind) {
    StrideSet letters = entry.stride;
    if (rule.stride) letters = letters & *rule.stride;
    letters = letters & stride_applicability(kind);
    if (letters.empty()) return std::nullopt;
    return letters;
}

}  // namespace

std::vector<RuleMatch> match_rules(const Catalog& catalog, const Model& model, const CrossingGroup& crossing) {
    std::vector<RuleMatch> out;
    const auto endpoints = crossing.endpoints(model);

    for (const auto& rule : catalog.rules) {
        const CatalogEntry* entry = find_entry(catalog.entries, rule.entry);
        if (!entry || !label_ok(rule.where, crossing)) continue;

        if (rule.where.kind == TargetKind::DataFlow) {
            for (const auto& flow_id : crossing.flows) {
                const DataFlow* flow = model.find_flow(flow_id);
                if (!flow) continue;
                if (rule.where.tag && !flow->has_tag(*rule.where.tag)) continue;
                if (rule.where.direction == Direction::Inbound && !is_inbound(model, *flow)) continue;
                if (rule.where.direction == Direction::Outbound && !is_outbound(model, *flow)) continue;
                if (auto letters = letters_for(*entry, rule, TargetKind::DataFlow))
                    out.push_back({rule.rule_id, entry->tech_id, flow->id, TargetKind::DataFlow, *letters});
            }
            continue;
        }

        for (const auto& id : endpoints) {
            const Element* element = model.find_element(id);
            if (target_kind(element->kind) != rule.where.kind) continue;
            if (rule.where.tag && !element->has_tag(*rule.where.tag)) continue;
            if (auto letters = letters_for(*entry, rule, rule.where.kind))
                out.push_back({rule.rule_id, entry->tech_id, element->id, rule.where.kind, *letters});
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const RuleMatch& a, const RuleMatch& b) {
        if (int c = natural_compare(a.target, b.target); c != 0) return c < 0;
        if (int c = natural_compare(a.tech_id, b.tech_id); c != 0) return c < 0;
        return natural_less(a.rule_id, b.rule_id);
    });
    return out;
}

}  // namespace crossway
