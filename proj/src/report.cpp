#include "crossway/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "crossway/ids.hpp"

namespace crossway {

using ordered_json = nlohmann::ordered_json;

std::optional<ReportFormat> report_format_from(std::string_view name) {
    if (name == "md" || name == "markdown") return ReportFormat::Markdown;
    if (name == "csv") return ReportFormat::CSV;
    if (name == "json") return ReportFormat::JSONLike;
    if (name == "dot") return ReportFormat::DOT;
    return std::nullopt;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k) out += sep;
        out += items[k];
    }
    return out;
}

namespace {

const char* kArrow = " \xE2\x86\x92 ";  // " → "

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k) line += ',';
        line += csv_field(fields[k]);
    }
    return line + "\r\n";
}

std::string md_cell(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string pairs_text(const CrossingGroup& g) {
    std::vector<std::string> parts;
    for (const auto& [a, b] : g.endpoint_pairs) parts.push_back(a + "<->" + b);
    return join(parts, "; ");
}

ordered_json crossing_json(const CrossingGroup& g) {
    ordered_json j;
    j["label"] = g.label;
    j["endpoint_a"] = g.endpoint_a;
    j["endpoint_b"] = g.endpoint_b;
    ordered_json pairs = ordered_json::array();
    for (const auto& [a, b] : g.endpoint_pairs) pairs.push_back({a, b});
    j["endpoint_pairs"] = pairs;
    j["flows"] = g.flows;
    j["boundaries_crossed"] = g.boundaries_crossed;
    return j;
}

ordered_json threat_json(const Threat& t) {
    ordered_json j;
    j["threat_id"] = t.threat_id;
    j["crossing"] = t.crossing;
    j["target"] = t.target;
    j["target_kind"] = std::string(to_string(t.target_kind));
    j["stride"] = t.stride.to_string('\0');
    j["category"] = std::string(to_string(t.category));
    j["tech_id"] = t.tech_id;
    j["finding"] = t.finding;
    j["rules"] = t.rule_ids;
    if (t.model_scoped()) j["subjects"] = t.subjects;
    return j;
}

ordered_json chain_json(const AttackChain& c, const Model& model) {
    ordered_json j;
    j["entry"] = c.entry;
    j["impact_flow"] = c.impact_flow;
    j["trail"] = c.trail;
    j["crossing_sequence"] = c.crossing_sequence;
    j["persists_via"] = c.persists_via;
    j["persistent_context"] = persistence_flags(c, model);
    return j;
}

std::string threat_row_md(const Threat& t) {
    std::string target = t.model_scoped() ? join(t.subjects, ", ") : t.target;
    return "| " + md_cell(target) + " | " + t.stride.to_string() + " | " + std::string(to_string(t.category)) + " | " +
           md_cell(t.tech_id) + " | " + md_cell(t.finding) + " |\n";
}

const char* kThreatHeader =
    "| Target | STRIDE | Category | Catalog ID | Finding |\n"
    "| --- | --- | --- | --- | --- |\n";

}  // namespace

std::string threat_table(const ElicitationReport& report, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Markdown: {
            os << "# Threat report: " << report.model_name << "\n";
            if (report.crossings.empty() && report.threats.empty()) return os.str();
            os << "\nCrossings: " << report.crossings.size() << " | Threats: " << report.threats.size() << "\n";
            for (const auto& g : report.crossings) {
                os << "\n## Crossing (" << g.label << ")\n\n";
                os << "Endpoints: " << pairs_text(g) << " | Flows: " << join(g.flows, ", ")
                   << " | Boundaries: " << (g.boundaries_crossed.empty() ? "none" : join(g.boundaries_crossed, ", "))
                   << "\n\n";
                bool any = false;
                for (const auto& t : report.threats) {
                    if (t.crossing != g.label || t.model_scoped()) continue;
                    if (!any) os << kThreatHeader;
                    any = true;
                    os << threat_row_md(t);
                }
                if (!any) os << "_No threats elicited._\n";
            }
            bool header = false;
            for (const auto& t : report.threats) {
                if (!t.model_scoped()) continue;
                if (!header) os << "\n## Model-wide findings\n\n" << kThreatHeader;
                header = true;
                os << threat_row_md(t);
            }
            return os.str();
        }
        case ReportFormat::CSV: {
            os << csv_row({"threat_id", "crossing", "target", "target_kind", "stride", "category", "tech_id", "finding"});
            for (const auto& t : report.threats)
                os << csv_row({t.threat_id, t.crossing, t.model_scoped() ? join(t.subjects, " ") : t.target,
                               t.model_scoped() ? "model" : std::string(to_string(t.target_kind)),
                               t.stride.to_string('\0'), std::string(to_string(t.category)), t.tech_id, t.finding});
            return os.str();
        }
        case ReportFormat::JSONLike: {
            ordered_json j;
            j["version"] = kExportSchemaVersion;
            j["model"] = report.model_name;
            ordered_json cs = ordered_json::array();
            for (const auto& g : report.crossings) cs.push_back(crossing_json(g));
            j["crossings"] = cs;
            ordered_json ts = ordered_json::array();
            for (const auto& t : report.threats) ts.push_back(threat_json(t));
            j["threats"] = ts;
            j["chains"] = ordered_json::array();
            return j.dump(2) + "\n";
        }
        case ReportFormat::DOT: break;
    }
    throw std::invalid_argument("threat tables have no DOT form");
}

std::string crossings_report(const Model& model, const std::vector<CrossingGroup>& crossings, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Markdown:
            os << "# Crossings: " << model.name << "\n\n";
            os << "| Crossing | Endpoints | Flows | Boundaries |\n| --- | --- | --- | --- |\n";
            for (const auto& g : crossings)
                os << "| " << g.label << " | " << pairs_text(g) << " | " << join(g.flows, ", ") << " | "
                   << (g.boundaries_crossed.empty() ? "none" : join(g.boundaries_crossed, ", ")) << " |\n";
            return os.str();
        case ReportFormat::CSV:
            os << csv_row({"label", "endpoint_a", "endpoint_b", "endpoint_pairs", "flows", "boundaries"});
            for (const auto& g : crossings) {
                std::vector<std::string> pairs;
                for (const auto& [a, b] : g.endpoint_pairs) pairs.push_back(a + "-" + b);
                os << csv_row({g.label, g.endpoint_a, g.endpoint_b, join(pairs, " "), join(g.flows, " "),
                               join(g.boundaries_crossed, " ")});
            }
            return os.str();
        case ReportFormat::JSONLike: return export_json(model, crossings, {}, {});
        case ReportFormat::DOT: break;
    }
    throw std::invalid_argument("crossing reports have no DOT form");
}

std::string chains_report(const Model& model, const std::vector<AttackChain>& chains, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Markdown: {
            os << "# Attack chains: " << model.name << "\n";
            if (chains.empty()) {
                os << "\n_No chains found._\n";
                return os.str();
            }
            os << "\nEntry: " << chains.front().entry << " | Impact: " << chains.front().impact_flow
               << " | Chains: " << chains.size() << "\n";
            for (std::size_t k = 0; k < chains.size(); ++k) {
                const auto& c = chains[k];
                os << "\n## Chain " << (k + 1) << "\n\n";
                os << "- Trail (" << c.trail.size() << " flows): ";
                std::string at = c.entry;
                os << at;
                for (const auto& id : c.trail) {
                    const DataFlow* f = model.find_flow(id);
                    os << " -" << id << "-> " << (f ? f->dest : "?");
                }
                os << "\n- Crossings: " << join(c.crossing_sequence, kArrow) << "\n";
                auto persistent = persistence_flags(c, model);
                if (!c.persists_via.empty()) os << "- Writes: " << join(c.persists_via, ", ") << "\n";
                if (!persistent.empty()) os << "- Persistent via context store: " << join(persistent, ", ") << "\n";
            }
            return os.str();
        }
        case ReportFormat::CSV:
            os << csv_row({"entry", "impact_flow", "length", "trail", "crossing_sequence", "writes", "persistent_context"});
            for (const auto& c : chains)
                os << csv_row({c.entry, c.impact_flow, std::to_string(c.trail.size()), join(c.trail, " "),
                               join(c.crossing_sequence, " "), join(c.persists_via, " "),
                               join(persistence_flags(c, model), " ")});
            return os.str();
        case ReportFormat::JSONLike: return export_json(model, {}, {}, chains);
        case ReportFormat::DOT: break;
    }
    throw std::invalid_argument("chain reports have no DOT form");
}

std::string export_json(const Model& model, const std::vector<CrossingGroup>& crossings,
                        const std::vector<Threat>& threats, const std::vector<AttackChain>& chains) {
    ordered_json j;
    j["version"] = kExportSchemaVersion;
    j["model"] = model.name;
    ordered_json cs = ordered_json::array();
    for (const auto& g : crossings) cs.push_back(crossing_json(g));
    j["crossings"] = cs;
    ordered_json ts = ordered_json::array();
    for (const auto& t : threats) ts.push_back(threat_json(t));
    j["threats"] = ts;
    ordered_json ch = ordered_json::array();
    for (const auto& c : chains) ch.push_back(chain_json(c, model));
    j["chains"] = ch;
    return j.dump(2) + "\n";
}

std::string chain_summary(const Model& model, const std::vector<AttackChain>& chains) {
    struct Bucket {
        std::vector<std::string> sequence;
        std::size_t count = 0;
        std::size_t persistent = 0;
        const AttackChain* shortest = nullptr;
    };
    std::vector<Bucket> buckets;
    for (const auto& c : chains) {
        auto it = std::find_if(buckets.begin(), buckets.end(),
                               [&](const Bucket& b) { return b.sequence == c.crossing_sequence; });
        if (it == buckets.end()) {
            buckets.push_back({c.crossing_sequence, 0, 0, &c});
            it = std::prev(buckets.end());
        }
        ++it->count;
        if (!persistence_flags(c, model).empty()) ++it->persistent;
        if (c.trail.size() < it->shortest->trail.size() ||
            (c.trail.size() == it->shortest->trail.size() && natural_less(c.trail, it->shortest->trail)))
            it->shortest = &c;
    }
    std::sort(buckets.begin(), buckets.end(), [](const Bucket& a, const Bucket& b) {
        if (a.shortest->trail.size() != b.shortest->trail.size())
            return a.shortest->trail.size() < b.shortest->trail.size();
        return natural_less(a.sequence, b.sequence);
    });

    std::ostringstream os;
    if (chains.empty()) {
        os << "chains: 0\n";
        return os.str();
    }
    os << "entry " << chains.front().entry << " impact " << chains.front().impact_flow << "\n";
    os << "chains: " << chains.size() << "\n";
    for (const auto& b : buckets) {
        os << "sequence " << (b.sequence.empty() ? std::string("(none)") : join(b.sequence, kArrow)) << "\n";
        os << "  count: " << b.count << ", persistent: " << b.persistent << "\n";
        os << "  shortest (" << b.shortest->trail.size() << "): " << join(b.shortest->trail, " ") << "\n";
    }
    return os.str();
}

std::string cut_sets_report(const std::vector<LeafSet>& cuts) {
    std::ostringstream os;
    for (const auto& c : cuts) os << "{" << join(c, ", ") << "}\n";
    return os.str();
}

std::string diagnostics_report(const std::vector<Diagnostic>& diagnostics) {
    std::ostringstream os;
    for (const auto& d : diagnostics) os << format_diagnostic(d) << "\n";
    std::size_t errors = std::count_if(diagnostics.begin(), diagnostics.end(),
                                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
    os << errors << " error(s), " << diagnostics.size() - errors << " warning(s)\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// DOT

namespace {

// Decodes UTF-8 and emits ASCII, non-ASCII code points as &#N; entities.
std::string ascii_entities(std::string_view s) {
    std::string out;
    for (std::size_t k = 0; k < s.size();) {
        unsigned char c = static_cast<unsigned char>(s[k]);
        if (c < 0x80) {
            out += static_cast<char>(c);
            ++k;
            continue;
        }
        int extra = (c >= 0xF0) ? 3 : (c >= 0xE0) ? 2 : (c >= 0xC0) ? 1 : 0;
        unsigned cp = c & (0x3F >> extra);
        std::size_t j = 1;
        for (; j <= static_cast<std::size_t>(extra) && k + j < s.size(); ++j)
            cp = (cp << 6) | (static_cast<unsigned char>(s[k + j]) & 0x3F);
        out += "&#" + std::to_string(cp) + ";";
        k += j;
    }
    return out;
}

std::string dot_string(std::string_view s) {
    std::string out = "\"";
    for (char c : ascii_entities(s)) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

std::string html_text(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return ascii_entities(out);
}

std::string element_node(const Model& model, const Element& e) {
    std::string attrs;
    const bool coarse = is_decomposed(model, e.id);
    switch (e.kind) {
        case ElementKind::Process:
            attrs = "shape=ellipse, label=" + dot_string(e.id + "\n" + e.name);
            if (coarse) attrs += ", style=dotted";
            break;
        case ElementKind::ExternalEntity:
            attrs = "shape=box, label=" + dot_string(e.id + "\n" + e.name);
            break;
        case ElementKind::DataStore:
            attrs = "shape=plaintext, label=<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\">"
                    "<TR><TD SIDES=\"TB\">" + html_text(e.id + ": " + e.name) + "</TD></TR></TABLE>>";
            break;
    }
    return e.id + " [" + attrs + "];";
}

}  // namespace

std::string render_dfd(const Model& model) {
    std::ostringstream os;
    os << "digraph " << dot_string(model.name) << " {\n";
    os << "  graph [rankdir=LR, fontname=\"Helvetica\"];\n";
    os << "  node [fontname=\"Helvetica\"];\n";
    os << "  edge [fontname=\"Helvetica\", fontsize=10];\n";

    std::set<std::string> placed;
    for (const auto& b : model.boundaries) {
        os << "  subgraph cluster_" << b.id << " {\n";
        os << "    label=" << dot_string(b.id + ": " + b.name) << ";\n";
        os << "    style=dashed;\n";
        for (const auto& m : b.members) {
            const Element* e = model.find_element(m);
            if (!e || !placed.insert(m).second) continue;
            os << "    " << element_node(model, *e) << "\n";
        }
        os << "  }\n";
    }
    for (const auto& e : model.elements)
        if (placed.insert(e.id).second) os << "  " << element_node(model, e) << "\n";

    std::set<std::string> fine;
    for (const DataFlow* f : analysis_flows(model)) fine.insert(f->id);
    for (const auto& f : model.flows) {
        os << "  " << f.source << " -> " << f.dest << " [label=" << dot_string(f.id);
        if (!fine.count(f.id)) os << ", style=dotted, color=gray";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string render_tree(const AttackTree& tree) {
    std::ostringstream os;
    os << "digraph \"attack_tree\" {\n";
    os << "  graph [rankdir=TB, fontname=\"Helvetica\"];\n";
    os << "  node [fontname=\"Helvetica\"];\n";
    std::vector<std::string> edges;
    int next = 0;
    auto walk = [&](auto&& self, const TreeNode& node) -> int {
        const int id = next++;
        const std::string name = "n" + std::to_string(id);
        if (node.is_gate()) {
            const char* gate = node.type == NodeType::And ? "AND" : "OR";
            os << "  " << name << " [shape=ellipse, label=" << dot_string(std::string(gate) + "\n" + node.label)
               << (node.type == NodeType::And ? ", style=bold" : "") << "];\n";
        } else {
            std::string text = node.leaf_id + "\n" + node.label;
            if (node.ref) text += "\n[" + *node.ref + "]";
            os << "  " << name << " [shape=box, label=" << dot_string(text) << "];\n";
        }
        for (const auto& c : node.children) {
            int child = self(self, c);
            edges.push_back("  " + name + " -> n" + std::to_string(child) + ";");
        }
        return id;
    };
    walk(walk, tree.root);
    for (const auto& e : edges) os << e << "\n";
    os << "}\n";
    return os.str();
}

}  // namespace crossway
