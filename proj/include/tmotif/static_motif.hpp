#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tmotif/network.hpp"

namespace tmotif {

/// Directed static graph: distinct edges of a layer without multiplicities.
struct StaticGraph {
    std::shared_ptr<const NodeTable> nodes;
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;  ///< sorted, unique

    bool has_edge(NodeIndex source, NodeIndex target) const;
};

StaticGraph static_projection(const TemporalLayer& layer);

/// Two-edge static patterns. Convey and weakly-connected coincide without
/// timestamps and are merged into `path`; repetition has no static form.
enum class StaticPattern : std::uint8_t { mutual = 0, in_burst = 1, out_burst = 2, path = 3 };

inline constexpr std::array<StaticPattern, 4> kStaticPatterns{StaticPattern::mutual, StaticPattern::in_burst,
                                                              StaticPattern::out_burst, StaticPattern::path};

std::string_view static_pattern_name(StaticPattern p);

struct StaticCensus {
    std::array<std::uint64_t, 4> counts{};
    std::uint64_t count(StaticPattern p) const { return counts[static_cast<std::size_t>(p)]; }
};

/// Counts unordered pairs of distinct edges sharing a node, by pattern.
StaticCensus static_census(const StaticGraph& graph);

/// One unordered edge pair with its nodes in role order:
///   mutual      {a, b}            (roles not distinguished)
///   in_burst    {center, leaf, leaf}   center is the shared target
///   out_burst   {center, leaf, leaf}   center is the shared source
///   path        {source, center, sink}
struct StaticInstance {
    StaticPattern pattern = StaticPattern::mutual;
    std::array<NodeIndex, 3> nodes{};
    std::size_t node_count = 0;
};

/// Visits every edge pair counted by static_census.
void for_each_static_instance(const StaticGraph& graph, const std::function<void(const StaticInstance&)>& visit);

}  // namespace tmotif
