#include "tmotif/null_models.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include <fmt/format.h>

#include "tmotif/random.hpp"

namespace tmotif {

namespace {

std::uint64_t key_of(NodeIndex s, NodeIndex t) { return (static_cast<std::uint64_t>(s) << 32) | t; }

std::vector<Event> events_from(std::span<const std::pair<NodeIndex, NodeIndex>> edges,
                               std::span<const std::vector<Day>> timelines) {
    std::vector<Event> events;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (Day t : timelines[i]) events.push_back(Event{edges[i].first, edges[i].second, t});
    }
    return events;
}

TemporalLayer link_shuffle(const TemporalLayer& layer, Rng& rng) {
    const std::uint64_t n = layer.node_count();
    const std::uint64_t m = layer.edges().size();
    const std::uint64_t slots = n * (n > 0 ? n - 1 : 0);
    if (m > slots) {
        throw NetworkError(fmt::format("link shuffling cannot place {} edges on {} nodes", m, n));
    }
    // Floyd's sampling of m distinct ordered pairs out of n(n-1).
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(m * 2);
    for (std::uint64_t j = slots - m; j < slots; ++j) {
        const std::uint64_t r = rng.below(j + 1);
        if (!chosen.insert(r).second) chosen.insert(j);
    }
    std::vector<std::uint64_t> picked(chosen.begin(), chosen.end());
    std::sort(picked.begin(), picked.end());

    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    edges.reserve(m);
    for (std::uint64_t k : picked) {
        const auto s = static_cast<NodeIndex>(k / (n - 1));
        auto t = static_cast<NodeIndex>(k % (n - 1));
        if (t >= s) ++t;
        edges.emplace_back(s, t);
    }
    std::vector<std::vector<Day>> timelines;
    timelines.reserve(m);
    for (const auto& e : layer.edges()) timelines.push_back(e.times);
    rng.shuffle(std::span(timelines));
    return TemporalLayer(layer.kind(), layer.node_table(), events_from(edges, timelines));
}

TemporalLayer degree_constrained_shuffle(const TemporalLayer& layer, Rng& rng, const ShuffleOptions& options) {
    const auto source_edges = layer.edges();
    const std::uint64_t m = source_edges.size();
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    std::vector<std::vector<Day>> timelines;
    std::unordered_set<std::uint64_t> present;
    present.reserve(m * 2);
    for (const auto& e : source_edges) {
        edges.emplace_back(e.source, e.target);
        timelines.push_back(e.times);
        present.insert(key_of(e.source, e.target));
    }
    if (m >= 2) {
        const std::uint64_t wanted = options.swaps_per_edge * m;
        const std::uint64_t max_attempts = wanted * options.attempts_per_swap;
        std::uint64_t accepted = 0;
        for (std::uint64_t attempt = 0; attempt < max_attempts && accepted < wanted; ++attempt) {
            const auto i = rng.below(m);
            const auto j = rng.below(m);
            if (i == j) continue;
            const auto [a, b] = edges[i];
            const auto [c, d] = edges[j];
            if (a == d || c == b) continue;
            if (present.count(key_of(a, d)) || present.count(key_of(c, b))) continue;
            present.erase(key_of(a, b));
            present.erase(key_of(c, d));
            present.insert(key_of(a, d));
            present.insert(key_of(c, b));
            edges[i] = {a, d};
            edges[j] = {c, b};
            ++accepted;
        }
    }
    return TemporalLayer(layer.kind(), layer.node_table(), events_from(edges, timelines));
}

/// Applies `redraw` to every edge timeline, keeping the static structure.
template <typename F>
TemporalLayer retime_edges(const TemporalLayer& layer, F&& redraw) {
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    std::vector<std::vector<Day>> timelines;
    for (const auto& e : layer.edges()) {
        edges.emplace_back(e.source, e.target);
        timelines.push_back(redraw(e.times));
    }
    return TemporalLayer(layer.kind(), layer.node_table(), events_from(edges, timelines));
}

TemporalLayer timeline_shuffle(const TemporalLayer& layer, Rng& rng) {
    const auto [lo, hi] = *layer.time_span();
    return retime_edges(layer, [&](const std::vector<Day>& times) {
        std::vector<Day> drawn(times.size());
        for (auto& t : drawn) t = rng.between(lo, hi);
        std::sort(drawn.begin(), drawn.end());
        return drawn;
    });
}

TemporalLayer inter_event_shuffle(const TemporalLayer& layer, Rng& rng) {
    return retime_edges(layer, [&](const std::vector<Day>& times) {
        if (times.size() < 3) return times;
        std::vector<Day> gaps(times.size() - 1);
        for (std::size_t i = 0; i + 1 < times.size(); ++i) gaps[i] = times[i + 1] - times[i];
        rng.shuffle(std::span(gaps));
        std::vector<Day> rebuilt{times.front()};
        for (Day g : gaps) rebuilt.push_back(rebuilt.back() + g);
        return rebuilt;
    });
}

TemporalLayer timestamp_shuffle(const TemporalLayer& layer, Rng& rng) {
    std::vector<Day> stamps;
    stamps.reserve(layer.event_count());
    for (const auto& e : layer.events()) stamps.push_back(e.t);
    rng.shuffle(std::span(stamps));
    std::size_t next = 0;
    return retime_edges(layer, [&](const std::vector<Day>& times) {
        std::vector<Day> assigned(stamps.begin() + static_cast<std::ptrdiff_t>(next),
                                  stamps.begin() + static_cast<std::ptrdiff_t>(next + times.size()));
        next += times.size();
        std::sort(assigned.begin(), assigned.end());
        return assigned;
    });
}

// --- conservation checks, keyed by node names so tables may differ ---

using NamedEdge = std::pair<std::string, std::string>;

std::map<NamedEdge, std::vector<Day>> named_timelines(const TemporalLayer& layer) {
    std::map<NamedEdge, std::vector<Day>> out;
    for (const auto& e : layer.edges()) out[{layer.node_name(e.source), layer.node_name(e.target)}] = e.times;
    return out;
}

std::vector<std::vector<Day>> timeline_multiset(const TemporalLayer& layer) {
    std::vector<std::vector<Day>> out;
    for (const auto& e : layer.edges()) out.push_back(e.times);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::string, std::pair<std::size_t, std::size_t>> static_degrees(const TemporalLayer& layer) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> deg;
    for (NodeIndex v = 0; v < layer.node_count(); ++v) deg[layer.node_name(v)];
    for (const auto& e : layer.edges()) {
        ++deg[layer.node_name(e.source)].second;
        ++deg[layer.node_name(e.target)].first;
    }
    return deg;
}

bool same_edge_set(const TemporalLayer& a, const TemporalLayer& b) {
    const auto x = named_timelines(a);
    const auto y = named_timelines(b);
    return x.size() == y.size() &&
           std::equal(x.begin(), x.end(), y.begin(), [](const auto& p, const auto& q) { return p.first == q.first; });
}

/// Compares per-edge summaries of two layers with identical edge sets.
template <typename F>
bool per_edge_equal(const TemporalLayer& a, const TemporalLayer& b, F&& summary) {
    if (!same_edge_set(a, b)) return false;
    const auto x = named_timelines(a);
    const auto y = named_timelines(b);
    auto it = y.begin();
    for (const auto& [edge, times] : x) {
        if (summary(times) != summary(it->second)) return false;
        ++it;
    }
    return true;
}

bool no_self_loops(const TemporalLayer& layer) {
    return std::none_of(layer.edges().begin(), layer.edges().end(),
                        [](const Edge& e) { return e.source == e.target; });
}

std::vector<Day> sorted_gaps(const std::vector<Day>& times) {
    std::vector<Day> gaps;
    for (std::size_t i = 0; i + 1 < times.size(); ++i) gaps.push_back(times[i + 1] - times[i]);
    std::sort(gaps.begin(), gaps.end());
    return gaps;
}

}  // namespace

std::string_view null_model_name(NullModel model) {
    switch (model) {
        case NullModel::ls: return "ls";
        case NullModel::dcls: return "dcls";
        case NullModel::wts: return "wts";
        case NullModel::is: return "is";
        case NullModel::ts: return "ts";
    }
    return "unknown";
}

NullModel parse_null_model(std::string_view name) {
    for (auto m : kNullModels) {
        if (null_model_name(m) == name) return m;
    }
    throw std::invalid_argument(fmt::format("unknown null model '{}', expected ls|dcls|wts|is|ts", name));
}

TemporalLayer shuffle(const TemporalLayer& layer, NullModel model, std::uint64_t seed, const ShuffleOptions& options) {
    if (layer.event_count() == 0) return layer;
    Rng rng(seed);
    switch (model) {
        case NullModel::ls: return link_shuffle(layer, rng);
        case NullModel::dcls: return degree_constrained_shuffle(layer, rng, options);
        case NullModel::wts: return timeline_shuffle(layer, rng);
        case NullModel::is: return inter_event_shuffle(layer, rng);
        case NullModel::ts: return timestamp_shuffle(layer, rng);
    }
    return layer;
}

bool ConservationReport::all_passed() const {
    return std::all_of(laws.begin(), laws.end(), [](const ConservationLaw& l) { return l.passed; });
}

ConservationReport verify_conservation(const TemporalLayer& original, const TemporalLayer& shuffled, NullModel model) {
    ConservationReport report;
    auto law = [&](std::string name, bool passed) { report.laws.push_back({std::move(name), passed}); };
    auto event_count = [](const std::vector<Day>& t) { return t.size(); };

    switch (model) {
        case NullModel::ls:
            law("node count", original.node_count() == shuffled.node_count());
            law("distinct edge count", original.edges().size() == shuffled.edges().size());
            law("edge timeline multiset", timeline_multiset(original) == timeline_multiset(shuffled));
            law("no self-loops", no_self_loops(shuffled));
            break;
        case NullModel::dcls:
            law("in/out degree per node", static_degrees(original) == static_degrees(shuffled));
            law("edge timeline multiset", timeline_multiset(original) == timeline_multiset(shuffled));
            law("no self-loops", no_self_loops(shuffled));
            break;
        case NullModel::wts: {
            law("static edge set", same_edge_set(original, shuffled));
            law("events per edge", per_edge_equal(original, shuffled, event_count));
            const auto span = original.time_span();
            bool inside = true;
            for (const auto& e : shuffled.events()) {
                inside = inside && span && e.t >= span->first && e.t <= span->second;
            }
            law("timestamps within observation window", inside);
            break;
        }
        case NullModel::is:
            law("static edge set", same_edge_set(original, shuffled));
            law("first and last timestamp per edge", per_edge_equal(original, shuffled, [](const auto& t) {
                    return t.empty() ? std::pair<Day, Day>{0, 0} : std::pair{t.front(), t.back()};
                }));
            law("inter-event gap multiset per edge", per_edge_equal(original, shuffled, sorted_gaps));
            break;
        case NullModel::ts: {
            law("static edge set", same_edge_set(original, shuffled));
            law("events per edge", per_edge_equal(original, shuffled, event_count));
            std::vector<Day> a;
            std::vector<Day> b;
            for (const auto& e : original.events()) a.push_back(e.t);
            for (const auto& e : shuffled.events()) b.push_back(e.t);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            law("global timestamp multiset", a == b);
            break;
        }
    }
    return report;
}

}  // namespace tmotif
