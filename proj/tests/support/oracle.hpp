#pragma once

// Brute-force reference implementations used to check the library. They
// deliberately share no code with it beyond the data types: every tuple of
// events is tried and classified from node names directly.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tmotif/motif_class.hpp"
#include "tmotif/network.hpp"
#include "tmotif/static_motif.hpp"

namespace oracle {

using tmotif::Day;
using tmotif::Event;
using tmotif::TemporalLayer;

struct NamedEvent {
    std::string source;
    std::string target;
    Day t = 0;
};

inline std::vector<NamedEvent> named_events(const TemporalLayer& layer) {
    std::vector<NamedEvent> out;
    for (const auto& e : layer.events()) out.push_back({layer.node_name(e.source), layer.node_name(e.target), e.t});
    return out;
}

/// Pair class letter straight from the glossary, or nothing when the events
/// share no node.
inline std::optional<char> pair_letter(const NamedEvent& a, const NamedEvent& b) {
    if (a.source == b.source && a.target == b.target) return 'R';
    if (a.source == b.target && a.target == b.source) return 'P';
    if (a.target == b.target) return 'I';
    if (a.source == b.source) return 'O';
    if (b.source == a.target) return 'C';
    if (b.target == a.source) return 'W';
    return std::nullopt;
}

inline std::size_t letter_index(char c) { return std::string_view("RPIOCW").find(c); }

inline bool shares_node(const NamedEvent& a, const NamedEvent& b) {
    return a.source == b.source || a.source == b.target || a.target == b.source || a.target == b.target;
}

/// Checks the four motif constraints on a time-ordered tuple.
inline bool qualifies(const std::vector<NamedEvent>& ev, std::optional<Day> dc, std::optional<Day> dw) {
    std::set<std::string> nodes;
    for (const auto& e : ev) {
        nodes.insert(e.source);
        nodes.insert(e.target);
    }
    if (nodes.size() > 3) return false;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        for (std::size_t j = i + 1; j < ev.size(); ++j) {
            if (ev[i].t == ev[j].t) return false;
        }
    }
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
        if (ev[i].t > ev[i + 1].t) return false;
        if (shares_node(ev[i], ev[i + 1]) && dc && ev[i + 1].t - ev[i].t > *dc) return false;
    }
    // connectivity: every event must touch another one
    for (std::size_t i = 0; i < ev.size(); ++i) {
        bool touches = false;
        for (std::size_t j = 0; j < ev.size(); ++j) touches |= (i != j && shares_node(ev[i], ev[j]));
        if (!touches) return false;
    }
    if (dw && ev.back().t - ev.front().t > *dw) return false;
    return true;
}

struct Tuple {
    std::vector<std::size_t> ids;
    std::size_t class_index = 0;
};

/// Every qualifying tuple of `size` events, by brute force over all
/// combinations of event indices.
inline std::vector<Tuple> enumerate(const TemporalLayer& layer, int size, std::optional<Day> dc,
                                    std::optional<Day> dw) {
    auto ev = named_events(layer);
    std::vector<Tuple> out;
    const std::size_t k = ev.size();
    auto emit = [&](std::vector<std::size_t> ids) {
        std::vector<NamedEvent> tuple;
        for (auto i : ids) tuple.push_back(ev[i]);
        std::sort(tuple.begin(), tuple.end(), [](const NamedEvent& a, const NamedEvent& b) { return a.t < b.t; });
        if (!qualifies(tuple, dc, dw)) return;
        std::size_t cls = letter_index(*pair_letter(tuple[0], tuple[1]));
        if (size == 3) cls = cls * 6 + letter_index(*pair_letter(tuple[1], tuple[2]));
        out.push_back({std::move(ids), cls});
    };
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (size == 2) {
                emit({i, j});
                continue;
            }
            for (std::size_t l = j + 1; l < k; ++l) emit({i, j, l});
        }
    }
    return out;
}

inline std::vector<std::uint64_t> census(const TemporalLayer& layer, int size, std::optional<Day> dc,
                                         std::optional<Day> dw) {
    std::vector<std::uint64_t> counts(size == 2 ? 6 : 36, 0);
    for (const auto& t : enumerate(layer, size, dc, dw)) ++counts[t.class_index];
    return counts;
}

/// Static pattern counts over all unordered pairs of distinct edges, indexed
/// mutual, in-burst, out-burst, path.
inline std::array<std::uint64_t, 4> static_census(const std::vector<std::pair<std::string, std::string>>& edges) {
    std::array<std::uint64_t, 4> counts{};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& [a, b] = edges[i];
            const auto& [c, d] = edges[j];
            if (a == d && b == c)
                ++counts[0];
            else if (b == d)
                ++counts[1];
            else if (a == c)
                ++counts[2];
            else if (b == c || d == a)
                ++counts[3];
        }
    }
    return counts;
}

inline std::vector<std::pair<std::string, std::string>> distinct_edges(const TemporalLayer& layer) {
    std::set<std::pair<std::string, std::string>> s;
    for (const auto& e : layer.events()) s.insert({layer.node_name(e.source), layer.node_name(e.target)});
    return {s.begin(), s.end()};
}

/// Collaboration records of one motif tuple: indices of collaboration events
/// whose endpoints are both motif nodes and whose time lies within the padded
/// motif window.
inline std::vector<std::size_t> overlay_records(const std::vector<NamedEvent>& motif,
                                                const std::vector<NamedEvent>& collabs, Day pad) {
    std::set<std::string> nodes;
    for (const auto& e : motif) {
        nodes.insert(e.source);
        nodes.insert(e.target);
    }
    Day lo = motif.front().t - pad;
    Day hi = motif.back().t + pad;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < collabs.size(); ++i) {
        const auto& c = collabs[i];
        if (nodes.count(c.source) && nodes.count(c.target) && c.t >= lo && c.t <= hi) out.push_back(i);
    }
    return out;
}

/// Triangle / cycle classification of three events on three nodes from the
/// directed static projection.
inline tmotif::TripleCategory category(const std::vector<NamedEvent>& ev) {
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> undirected;
    std::set<std::pair<std::string, std::string>> directed;
    for (const auto& e : ev) {
        nodes.insert(e.source);
        nodes.insert(e.target);
        undirected.insert(std::minmax(e.source, e.target));
        directed.insert({e.source, e.target});
    }
    if (nodes.size() == 2) return tmotif::TripleCategory::two_node;
    if (undirected.size() == 2) return tmotif::TripleCategory::wedge;
    std::map<std::string, int> out_deg;
    std::map<std::string, int> in_deg;
    for (const auto& [s, t] : directed) {
        ++out_deg[s];
        ++in_deg[t];
    }
    bool cycle = directed.size() == 3;
    for (const auto& n : nodes) cycle = cycle && out_deg[n] == 1 && in_deg[n] == 1;
    return cycle ? tmotif::TripleCategory::cyclic_triangle : tmotif::TripleCategory::acyclic_triangle;
}

}  // namespace oracle
