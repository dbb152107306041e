#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crossway/crossings.hpp"
#include "crossway/model.hpp"

namespace crossway {

inline constexpr const char* kContextStoreTag = "context-store";

/// Edge-disjoint trail of flows from an external entity to an impact flow.
struct AttackChain {
    std::string entry;
    std::string impact_flow;
    std::vector<std::string> trail;
    std::vector<std::string> crossing_sequence;  // consecutive repeats collapsed
    std::vector<std::string> persists_via;       // stores written, declaration order

    friend bool operator==(const AttackChain&, const AttackChain&) = default;
};

class ChainQueryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// All trails from `entry` ending in `impact_flow` with at most `max_len`
/// flows (default: number of flows). Flows are tried in declaration order;
/// the result is sorted by trail. Throws UnknownIdError for unknown ids and
/// ChainQueryError when entry is not an external entity or max_len is 0.
std::vector<AttackChain> enumerate_chains(const Model& model, std::string_view entry, std::string_view impact_flow,
                                          std::optional<std::size_t> max_len = std::nullopt);
std::vector<AttackChain> enumerate_chains(const Model& model, const std::vector<CrossingGroup>& crossings,
                                          std::string_view entry, std::string_view impact_flow,
                                          std::optional<std::size_t> max_len = std::nullopt);

/// Maps each flow to its crossing label and drops consecutive duplicates.
std::vector<std::string> crossing_sequence(const std::vector<CrossingGroup>& crossings,
                                           const std::vector<std::string>& trail);

/// Stores written by the chain that feed planning context (tagged context-store).
std::vector<std::string> persistence_flags(const AttackChain& chain, const Model& model);

/// Connectivity, entry/impact endpoints and no repeated flow.
bool is_valid_trail(const AttackChain& chain, const Model& model);

}  // namespace crossway
