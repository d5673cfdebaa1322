#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tmotif/dates.hpp"

namespace tmotif {

using NodeIndex = std::uint32_t;

/// Raised when a layer or network would violate one of its invariants.
class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sorted, de-duplicated table of node identifiers. Index order equals
/// lexicographic order of the identifiers, so comparing indices compares names.
class NodeTable {
public:
    NodeTable() = default;
    explicit NodeTable(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(NodeIndex i) const { return names_.at(i); }
    std::span<const std::string> names() const { return names_; }
    std::optional<NodeIndex> find(std::string_view name) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeIndex> index_;
};

enum class LayerKind { opposition, collaboration };

struct Event {
    NodeIndex source = 0;
    NodeIndex target = 0;
    Day t = 0;

    friend bool operator==(const Event&, const Event&) = default;
};

/// Global event order: (t, source, target).
inline bool chronological_less(const Event& a, const Event& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
}

/// A static edge together with its time-sorted event timestamps.
struct Edge {
    NodeIndex source = 0;
    NodeIndex target = 0;
    std::vector<Day> times;
};

/// One layer of a temporal network. Immutable once constructed.
///
/// Events are kept sorted by (t, source, target). For the undirected
/// collaboration layer every event is stored with source < target.
class TemporalLayer {
public:
    TemporalLayer(LayerKind kind, std::shared_ptr<const NodeTable> nodes, std::vector<Event> events);

    /// Empty layer over an empty node table.
    explicit TemporalLayer(LayerKind kind);

    LayerKind kind() const { return kind_; }
    bool directed() const { return kind_ == LayerKind::opposition; }

    const std::shared_ptr<const NodeTable>& node_table() const { return nodes_; }
    std::size_t node_count() const { return nodes_->size(); }
    const std::string& node_name(NodeIndex i) const { return nodes_->name(i); }

    std::span<const Event> events() const { return events_; }
    std::size_t event_count() const { return events_.size(); }

    /// Static edges sorted by (source, target).
    std::span<const Edge> edges() const { return edges_; }
    const Edge* find_edge(NodeIndex source, NodeIndex target) const;

    /// [min t, max t] over all events, or nothing for an empty layer.
    std::optional<std::pair<Day, Day>> time_span() const;

    /// Number of distinct nodes that appear as an event endpoint.
    std::size_t active_node_count() const;

    /// Same events re-expressed over a larger node table containing every
    /// current node name.
    TemporalLayer reindexed(std::shared_ptr<const NodeTable> nodes) const;

private:
    LayerKind kind_;
    std::shared_ptr<const NodeTable> nodes_;
    std::vector<Event> events_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, std::uint32_t> edge_lookup_;
};

bool same_events(const TemporalLayer& a, const TemporalLayer& b);

using AttributeMap = std::map<std::string, std::uint64_t>;

/// Shared node set with a directed opposition layer, an undirected
/// collaboration layer and optional per-node attributes (patents owned).
class TwoLayerNetwork {
public:
    /// Node set is the union of both layers' endpoints and the attribute keys.
    static TwoLayerNetwork build(const TemporalLayer& opposition, const TemporalLayer& collaboration,
                                 std::optional<AttributeMap> attributes = std::nullopt);

    const std::shared_ptr<const NodeTable>& node_table() const { return nodes_; }
    std::size_t node_count() const { return nodes_->size(); }
    const TemporalLayer& opposition() const { return opposition_; }
    const TemporalLayer& collaboration() const { return collaboration_; }

    bool has_attributes() const { return has_attributes_; }
    /// Attribute of a node, or nothing when the node has no recorded value.
    std::optional<std::uint64_t> attribute(NodeIndex node) const;
    /// Throws NetworkError naming `analysis` when no attribute table was supplied.
    void require_attributes(std::string_view analysis) const;

private:
    TwoLayerNetwork(std::shared_ptr<const NodeTable> nodes, TemporalLayer opposition,
                    TemporalLayer collaboration, std::vector<std::optional<std::uint64_t>> attributes,
                    bool has_attributes);

    std::shared_ptr<const NodeTable> nodes_;
    TemporalLayer opposition_;
    TemporalLayer collaboration_;
    std::vector<std::optional<std::uint64_t>> attributes_;
    bool has_attributes_ = false;
};

struct LayerSummary {
    std::size_t nodes = 0;  ///< nodes incident to at least one event of the layer
    std::size_t edges = 0;
    std::size_t events = 0;
    std::optional<std::pair<Day, Day>> span;
};

LayerSummary summarize_layer(const TemporalLayer& layer);

struct NetworkSummary {
    std::size_t nodes = 0;
    LayerSummary opposition;
    LayerSummary collaboration;
};

NetworkSummary layer_summary(const TwoLayerNetwork& net);

}  // namespace tmotif
