#include "crossway/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

#include "crossway/ids.hpp"

namespace crossway {

std::string make_threat_id(std::string_view crossing, std::string_view target, std::string_view tech_id) {
    // FNV-1a, 32 bit
    std::uint32_t h = 2166136261u;
    auto feed = [&](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 16777619u;
        }
        h ^= 0x1f;
        h *= 16777619u;
    };
    feed(crossing);
    feed(target);
    feed(tech_id);
    char hex[9];
    std::snprintf(hex, sizeof hex, "%08x", h);
    return "TH-" + std::string(crossing) + "-" + hex;
}

std::vector<Threat> elicit(const Model& model, const Catalog& catalog, const std::vector<CrossingGroup>& crossings) {
    std::vector<Threat> out;
    for (const auto& crossing : crossings) {
        for (const auto& m : match_rules(catalog, model, crossing)) {
            const CatalogEntry& entry = lookup(catalog.entries, m.tech_id);
            const ElicitationRule* rule = nullptr;
            for (const auto& r : catalog.rules)
                if (r.rule_id == m.rule_id) rule = &r;

            auto existing = std::find_if(out.begin(), out.end(), [&](const Threat& t) {
                return t.crossing == crossing.label && t.target == m.target && t.tech_id == m.tech_id;
            });
            if (existing != out.end()) {
                existing->stride = existing->stride | m.letters;
                existing->rule_ids.push_back(m.rule_id);
                if (rule && existing->finding.find(rule->note) == std::string::npos)
                    existing->finding += " | " + rule->note;
                continue;
            }
            Threat t;
            t.threat_id = make_threat_id(crossing.label, m.target, m.tech_id);
            t.crossing = crossing.label;
            t.target = m.target;
            t.target_kind = m.target_kind;
            t.stride = m.letters;
            t.category = entry.category;
            t.tech_id = m.tech_id;
            t.finding = rule ? rule->note : std::string();
            t.rule_ids.push_back(m.rule_id);
            out.push_back(std::move(t));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Threat& a, const Threat& b) {
        if (int c = natural_compare(a.crossing, b.crossing); c != 0) return c < 0;
        if (int c = natural_compare(a.target, b.target); c != 0) return c < 0;
        return natural_less(a.tech_id, b.tech_id);
    });
    return out;
}

std::vector<Threat> elicit(const Model& model, const Catalog& catalog) {
    return elicit(model, catalog, find_crossings(model).groups);
}

std::vector<Threat> consolidate_repudiation(const Model& model, const Catalog& catalog) {
    const CatalogEntry* entry = find_entry(catalog.entries, kRepudiationTechnique);
    if (!entry) return {};

    std::vector<std::string> unlogged, unsigned_sources;
    for (const auto& e : model.elements) {
        if (e.kind == ElementKind::Process && !is_decomposed(model, e.id)) {
            auto it = e.annotations.find("audit_logging");
            if (it == e.annotations.end() || it->second != "true") unlogged.push_back(e.id);
        } else if (e.kind == ElementKind::ExternalEntity && e.has_tag(kUnsignedOutputTag)) {
            unsigned_sources.push_back(e.id);
        }
    }
    if (unlogged.empty() && unsigned_sources.empty()) return {};

    auto join = [](const std::vector<std::string>& ids) {
        std::string s;
        for (const auto& id : ids) s += (s.empty() ? "" : ", ") + id;
        return s;
    };

    Threat t;
    t.threat_id = make_threat_id(kModelScope, kModelScope, entry->tech_id);
    t.crossing = kModelScope;
    t.target = kModelScope;
    t.target_kind = TargetKind::Process;
    t.stride = StrideSet{Stride::R};
    t.category = entry->category;
    t.tech_id = entry->tech_id;
    if (!unlogged.empty())
        t.finding = "No tamper-evident audit logging of commands, plans, prompts or sensor data in " + join(unlogged);
    if (!unsigned_sources.empty()) {
        if (!t.finding.empty()) t.finding += "; ";
        t.finding += "no signed provenance for content delivered by " + join(unsigned_sources);
    }
    t.subjects = unlogged;
    t.subjects.insert(t.subjects.end(), unsigned_sources.begin(), unsigned_sources.end());
    return {t};
}

bool is_applicable(const Threat& threat, const Model& model) {
    if (threat.stride.empty()) return false;
    if (!threat.model_scoped()) return threat.stride.subset_of(stride_applicability(threat.target_kind));
    return std::all_of(threat.subjects.begin(), threat.subjects.end(), [&](const std::string& id) {
        const Element* e = model.find_element(id);
        return e && threat.stride.subset_of(stride_applicability(e->kind));
    });
}

ElicitationReport analyze(const Model& model, const Catalog& catalog) {
    ElicitationReport report;
    report.model_name = model.name;
    report.crossings = find_crossings(model).groups;
    report.threats = elicit(model, catalog, report.crossings);
    for (auto& t : consolidate_repudiation(model, catalog)) report.threats.push_back(std::move(t));
    return report;
}

}  // namespace crossway
