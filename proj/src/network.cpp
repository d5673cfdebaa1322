#include "tmotif/network.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace tmotif {

namespace {

std::uint64_t edge_key(NodeIndex source, NodeIndex target) {
    return (static_cast<std::uint64_t>(source) << 32) | target;
}

}  // namespace

NodeTable::NodeTable(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw NetworkError("node identifiers must be non-empty");
        index_.emplace(names_[i], static_cast<NodeIndex>(i));
    }
}

std::optional<NodeIndex> NodeTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

TemporalLayer::TemporalLayer(LayerKind kind) : TemporalLayer(kind, std::make_shared<NodeTable>(), {}) {}

TemporalLayer::TemporalLayer(LayerKind kind, std::shared_ptr<const NodeTable> nodes, std::vector<Event> events)
    : kind_(kind), nodes_(std::move(nodes)), events_(std::move(events)) {
    if (!nodes_) throw NetworkError("layer requires a node table");
    const auto n = nodes_->size();
    for (auto& e : events_) {
        if (e.source >= n || e.target >= n) {
            throw NetworkError(fmt::format("event endpoint out of range ({} nodes)", n));
        }
        if (e.source == e.target) {
            throw NetworkError(fmt::format("self-relation on node '{}'", nodes_->name(e.source)));
        }
        if (kind_ == LayerKind::collaboration && e.target < e.source) std::swap(e.source, e.target);
    }
    std::stable_sort(events_.begin(), events_.end(), chronological_less);

    std::vector<std::size_t> order(events_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = events_[a];
        const auto& y = events_[b];
        if (x.source != y.source) return x.source < y.source;
        return x.target < y.target;
    });
    for (std::size_t i : order) {
        const auto& e = events_[i];
        if (edges_.empty() || edges_.back().source != e.source || edges_.back().target != e.target) {
            edges_.push_back(Edge{e.source, e.target, {}});
        }
        edges_.back().times.push_back(e.t);
    }
    edge_lookup_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        edge_lookup_.emplace(edge_key(edges_[i].source, edges_[i].target), static_cast<std::uint32_t>(i));
    }
}

const Edge* TemporalLayer::find_edge(NodeIndex source, NodeIndex target) const {
    if (kind_ == LayerKind::collaboration && target < source) std::swap(source, target);
    auto it = edge_lookup_.find(edge_key(source, target));
    return it == edge_lookup_.end() ? nullptr : &edges_[it->second];
}

std::optional<std::pair<Day, Day>> TemporalLayer::time_span() const {
    if (events_.empty()) return std::nullopt;
    return std::pair{events_.front().t, events_.back().t};
}

std::size_t TemporalLayer::active_node_count() const {
    std::vector<bool> seen(nodes_->size(), false);
    std::size_t count = 0;
    for (const auto& e : events_) {
        for (NodeIndex v : {e.source, e.target}) {
            if (!seen[v]) {
                seen[v] = true;
                ++count;
            }
        }
    }
    return count;
}

TemporalLayer TemporalLayer::reindexed(std::shared_ptr<const NodeTable> nodes) const {
    std::vector<NodeIndex> remap(nodes_->size());
    for (NodeIndex i = 0; i < nodes_->size(); ++i) {
        auto found = nodes->find(nodes_->name(i));
        if (!found) throw NetworkError(fmt::format("node '{}' missing from target table", nodes_->name(i)));
        remap[i] = *found;
    }
    std::vector<Event> events(events_.begin(), events_.end());
    for (auto& e : events) {
        e.source = remap[e.source];
        e.target = remap[e.target];
    }
    return TemporalLayer(kind_, std::move(nodes), std::move(events));
}

bool same_events(const TemporalLayer& a, const TemporalLayer& b) {
    if (a.kind() != b.kind() || a.event_count() != b.event_count()) return false;
    for (std::size_t i = 0; i < a.event_count(); ++i) {
        const auto& x = a.events()[i];
        const auto& y = b.events()[i];
        if (x.t != y.t || a.node_name(x.source) != b.node_name(y.source) ||
            a.node_name(x.target) != b.node_name(y.target)) {
            return false;
        }
    }
    return true;
}

TwoLayerNetwork::TwoLayerNetwork(std::shared_ptr<const NodeTable> nodes, TemporalLayer opposition,
                                 TemporalLayer collaboration,
                                 std::vector<std::optional<std::uint64_t>> attributes, bool has_attributes)
    : nodes_(std::move(nodes)),
      opposition_(std::move(opposition)),
      collaboration_(std::move(collaboration)),
      attributes_(std::move(attributes)),
      has_attributes_(has_attributes) {}

TwoLayerNetwork TwoLayerNetwork::build(const TemporalLayer& opposition, const TemporalLayer& collaboration,
                                       std::optional<AttributeMap> attributes) {
    if (opposition.kind() != LayerKind::opposition) {
        throw NetworkError("opposition layer must be directed");
    }
    if (collaboration.kind() != LayerKind::collaboration) {
        throw NetworkError("collaboration layer must be undirected");
    }
    std::vector<std::string> names;
    for (const auto& layer : {&opposition, &collaboration}) {
        const auto span = layer->node_table()->names();
        names.insert(names.end(), span.begin(), span.end());
    }
    if (attributes) {
        for (const auto& [name, value] : *attributes) names.push_back(name);
    }
    auto table = std::make_shared<const NodeTable>(std::move(names));

    std::vector<std::optional<std::uint64_t>> attrs(table->size());
    if (attributes) {
        for (const auto& [name, value] : *attributes) attrs[*table->find(name)] = value;
    }
    return TwoLayerNetwork(table, opposition.reindexed(table), collaboration.reindexed(table), std::move(attrs),
                           attributes.has_value());
}

std::optional<std::uint64_t> TwoLayerNetwork::attribute(NodeIndex node) const {
    if (node >= attributes_.size()) return std::nullopt;
    return attributes_[node];
}

void TwoLayerNetwork::require_attributes(std::string_view analysis) const {
    if (!has_attributes_) {
        throw NetworkError(fmt::format("{} requires node attributes (patent counts), but none were supplied",
                                       analysis));
    }
}

LayerSummary summarize_layer(const TemporalLayer& layer) {
    return LayerSummary{layer.active_node_count(), layer.edges().size(), layer.event_count(), layer.time_span()};
}

NetworkSummary layer_summary(const TwoLayerNetwork& net) {
    return NetworkSummary{net.node_count(), summarize_layer(net.opposition()),
                          summarize_layer(net.collaboration())};
}

}  // namespace tmotif
