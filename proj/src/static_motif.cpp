#include "tmotif/static_motif.hpp"

#include <algorithm>

namespace tmotif {

bool StaticGraph::has_edge(NodeIndex source, NodeIndex target) const {
    return std::binary_search(edges.begin(), edges.end(), std::pair{source, target});
}

StaticGraph static_projection(const TemporalLayer& layer) {
    StaticGraph graph{layer.node_table(), {}};
    graph.edges.reserve(layer.edges().size());
    for (const auto& e : layer.edges()) graph.edges.emplace_back(e.source, e.target);
    // Layer edges are already sorted by (source, target) and unique.
    return graph;
}

std::string_view static_pattern_name(StaticPattern p) {
    switch (p) {
        case StaticPattern::mutual: return "mutual";
        case StaticPattern::in_burst: return "in-burst";
        case StaticPattern::out_burst: return "out-burst";
        case StaticPattern::path: return "path";
    }
    return "unknown";
}

StaticCensus static_census(const StaticGraph& graph) {
    const std::size_t n = graph.nodes ? graph.nodes->size() : 0;
    std::vector<std::uint64_t> in_deg(n, 0);
    std::vector<std::uint64_t> out_deg(n, 0);
    std::uint64_t reciprocal = 0;
    for (const auto& [s, t] : graph.edges) {
        ++out_deg[s];
        ++in_deg[t];
        if (s < t && graph.has_edge(t, s)) ++reciprocal;
    }
    StaticCensus census;
    std::uint64_t through = 0;
    for (std::size_t v = 0; v < n; ++v) {
        census.counts[1] += in_deg[v] * (in_deg[v] - (in_deg[v] > 0 ? 1 : 0)) / 2;
        census.counts[2] += out_deg[v] * (out_deg[v] - (out_deg[v] > 0 ? 1 : 0)) / 2;
        through += in_deg[v] * out_deg[v];
    }
    census.counts[0] = reciprocal;
    // Every reciprocal pair appears twice among head-to-tail edge pairs.
    census.counts[3] = through - 2 * reciprocal;
    return census;
}

void for_each_static_instance(const StaticGraph& graph, const std::function<void(const StaticInstance&)>& visit) {
    const std::size_t n = graph.nodes ? graph.nodes->size() : 0;
    std::vector<std::vector<NodeIndex>> out(n);
    std::vector<std::vector<NodeIndex>> in(n);
    for (const auto& [s, t] : graph.edges) {
        out[s].push_back(t);
        in[t].push_back(s);
    }
    for (NodeIndex v = 0; v < n; ++v) {
        for (NodeIndex w : out[v]) {
            if (v < w && graph.has_edge(w, v)) visit({StaticPattern::mutual, {v, w, 0}, 2});
        }
        for (std::size_t i = 0; i < in[v].size(); ++i) {
            for (std::size_t j = i + 1; j < in[v].size(); ++j) {
                visit({StaticPattern::in_burst, {v, in[v][i], in[v][j]}, 3});
            }
        }
        for (std::size_t i = 0; i < out[v].size(); ++i) {
            for (std::size_t j = i + 1; j < out[v].size(); ++j) {
                visit({StaticPattern::out_burst, {v, out[v][i], out[v][j]}, 3});
            }
        }
        for (NodeIndex s : in[v]) {
            for (NodeIndex t : out[v]) {
                if (s != t) visit({StaticPattern::path, {s, v, t}, 3});
            }
        }
    }
}

}  // namespace tmotif
