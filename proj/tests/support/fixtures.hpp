#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tmotif/network.hpp"

namespace fixture {

struct Row {
    std::string a;
    std::string b;
    tmotif::Day t;
};

/// Layer over exactly the nodes named in `rows` (plus `extra` nodes).
inline tmotif::TemporalLayer layer(tmotif::LayerKind kind, const std::vector<Row>& rows,
                                   const std::vector<std::string>& extra = {}) {
    std::set<std::string> names(extra.begin(), extra.end());
    for (const auto& r : rows) {
        names.insert(r.a);
        names.insert(r.b);
    }
    auto table = std::make_shared<const tmotif::NodeTable>(std::vector<std::string>(names.begin(), names.end()));
    std::vector<tmotif::Event> events;
    for (const auto& r : rows) events.push_back({*table->find(r.a), *table->find(r.b), r.t});
    return tmotif::TemporalLayer(kind, table, std::move(events));
}

inline tmotif::TemporalLayer opp(const std::vector<Row>& rows) { return layer(tmotif::LayerKind::opposition, rows); }
inline tmotif::TemporalLayer col(const std::vector<Row>& rows) {
    return layer(tmotif::LayerKind::collaboration, rows);
}

/// Event over the node table of `layer`, looked up by name.
inline tmotif::Event event(const tmotif::TemporalLayer& layer, const std::string& a, const std::string& b,
                           tmotif::Day t) {
    return {*layer.node_table()->find(a), *layer.node_table()->find(b), t};
}

/// The introductory example: A opposes B at t1, A and C collaborate at t2,
/// B opposes A and C at t3.
inline constexpr tmotif::Day kT1 = 100;
inline constexpr tmotif::Day kT2 = 200;
inline constexpr tmotif::Day kT3 = 300;

inline tmotif::TemporalLayer toy_opposition() { return opp({{"A", "B", kT1}, {"B", "A", kT3}, {"B", "C", kT3}}); }
inline tmotif::TemporalLayer toy_collaboration() { return col({{"A", "C", kT2}}); }
inline tmotif::TwoLayerNetwork toy_network() {
    return tmotif::TwoLayerNetwork::build(toy_opposition(), toy_collaboration());
}

}  // namespace fixture
