#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crossway/attack_tree.hpp"
#include "crossway/chains.hpp"
#include "crossway/crossings.hpp"
#include "crossway/engine.hpp"
#include "crossway/model.hpp"

namespace crossway {

enum class ReportFormat { Markdown, CSV, JSONLike, DOT };

std::optional<ReportFormat> report_format_from(std::string_view name);  // md|csv|json|dot

inline constexpr const char* kExportSchemaVersion = "1";

/// One section per crossing (even when empty) plus a model-wide section.
/// Markdown, CSV or JSONLike; throws std::invalid_argument for DOT.
std::string threat_table(const ElicitationReport& report, ReportFormat format);

std::string crossings_report(const Model& model, const std::vector<CrossingGroup>& crossings, ReportFormat format);

std::string chains_report(const Model& model, const std::vector<AttackChain>& chains, ReportFormat format);

/// Versioned export: {version, model, crossings[], threats[], chains[]}.
std::string export_json(const Model& model, const std::vector<CrossingGroup>& crossings,
                        const std::vector<Threat>& threats, const std::vector<AttackChain>& chains);

/// Digest of an enumeration: total, then each distinct crossing sequence
/// with its count and shortest trail.
std::string chain_summary(const Model& model, const std::vector<AttackChain>& chains);

std::string cut_sets_report(const std::vector<LeafSet>& cuts);

std::string diagnostics_report(const std::vector<Diagnostic>& diagnostics);

/// Processes as ellipses, entities as boxes, stores as open-ended records,
/// each boundary as a dashed cluster. Decomposed (level-0) processes and
/// their flows are drawn dotted.
std::string render_dfd(const Model& model);

std::string render_tree(const AttackTree& tree);

std::string join(const std::vector<std::string>& items, std::string_view sep);

}  // namespace crossway
