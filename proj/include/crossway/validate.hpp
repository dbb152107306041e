#pragma once

#include <vector>

#include "crossway/model.hpp"

namespace crossway {

/// Structural checks over a model. Never throws; results are ordered by
/// (subject id, code).
///
/// Errors: duplicate-id, dangling-endpoint, self-flow, store-to-store,
/// entity-in-boundary, multiple-boundaries, dangling-member, dangling-parent,
/// parent-not-process, hierarchy-cycle, hierarchy-imbalance,
/// crossing-label-conflict.
/// Warnings: entity-flow-not-external, isolated-element, label-without-crossing.
std::vector<Diagnostic> validate_model(const Model& model);

}  // namespace crossway
