#include "tmotif/motif_class.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace tmotif {

namespace {

constexpr std::array<std::string_view, 2> kTwoNodeRoles{"first-source", "first-target"};
constexpr std::array<std::string_view, 3> kInBurstRoles{"first-opposer", "second-opposer", "opposed"};
constexpr std::array<std::string_view, 3> kOutBurstRoles{"opposer", "first-opposed", "second-opposed"};
constexpr std::array<std::string_view, 3> kConveyRoles{"first-source", "center", "second-target"};
constexpr std::array<std::string_view, 3> kWeakRoles{"center", "first-target", "second-source"};
constexpr std::array<std::string_view, 3> kTripleRoles{"node-1", "node-2", "node-3"};

bool shares_node(const Event& a, const Event& b) {
    return a.source == b.source || a.source == b.target || a.target == b.source || a.target == b.target;
}

// Builds an event of class `c` following `prev` on the node universe {0, 1, 2}.
Event realize(PairClass c, const Event& prev, Day t) {
    const NodeIndex a = prev.source;
    const NodeIndex b = prev.target;
    const NodeIndex x = 3 - a - b;
    switch (c) {
        case PairClass::R: return {a, b, t};
        case PairClass::P: return {b, a, t};
        case PairClass::I: return {x, b, t};
        case PairClass::O: return {a, x, t};
        case PairClass::C: return {b, x, t};
        case PairClass::W: return {x, a, t};
    }
    return {a, b, t};
}

}  // namespace

char pair_label(PairClass c) {
    static constexpr std::array<char, 6> labels{'R', 'P', 'I', 'O', 'C', 'W'};
    return labels[static_cast<std::size_t>(c)];
}

PairClass pair_class_from_label(char label) {
    for (auto c : kPairClasses) {
        if (pair_label(c) == label) return c;
    }
    throw MotifError(fmt::format("unknown pair class '{}'", label));
}

std::string_view category_name(TripleCategory category) {
    switch (category) {
        case TripleCategory::two_node: return "two-node";
        case TripleCategory::wedge: return "wedge";
        case TripleCategory::acyclic_triangle: return "acyclic-triangle";
        case TripleCategory::cyclic_triangle: return "cyclic-triangle";
    }
    return "unknown";
}

TripleClass TripleClass::from_index(std::size_t index) {
    if (index >= kTripleClassCount) throw MotifError(fmt::format("triple class index {} out of range", index));
    return TripleClass{kPairClasses[index / 6], kPairClasses[index % 6]};
}

std::string TripleClass::label() const { return fmt::format("{}-{}", pair_label(first), pair_label(second)); }

TripleCategory TripleClass::category() const {
    const Event e1{0, 1, 1};
    const Event e2 = realize(first, e1, 2);
    const Event e3 = realize(second, e2, 3);
    return projection_category(e1, e2, e3);
}

PairClass classify_pair(const Event& e1, const Event& e2) {
    if (e1.t >= e2.t) throw MotifError("pair events must have strictly increasing timestamps");
    if (e1.source == e1.target || e2.source == e2.target) throw MotifError("self-relations cannot form motifs");
    if (!shares_node(e1, e2)) throw MotifError("pair events share no node");

    if (e1.source == e2.source && e1.target == e2.target) return PairClass::R;
    if (e1.source == e2.target && e1.target == e2.source) return PairClass::P;
    if (e1.target == e2.target) return PairClass::I;
    if (e1.source == e2.source) return PairClass::O;
    if (e2.source == e1.target) return PairClass::C;
    return PairClass::W;
}

TripleCategory projection_category(const Event& e1, const Event& e2, const Event& e3) {
    std::array<NodeIndex, 6> nodes{e1.source, e1.target, e2.source, e2.target, e3.source, e3.target};
    std::sort(nodes.begin(), nodes.end());
    const auto distinct = std::unique(nodes.begin(), nodes.end()) - nodes.begin();
    if (distinct > 3) throw MotifError("events span more than three nodes");
    if (distinct == 2) return TripleCategory::two_node;

    std::array<std::pair<NodeIndex, NodeIndex>, 3> directed{
        std::pair{e1.source, e1.target}, std::pair{e2.source, e2.target}, std::pair{e3.source, e3.target}};
    std::array<std::pair<NodeIndex, NodeIndex>, 3> undirected{};
    for (std::size_t i = 0; i < 3; ++i) {
        undirected[i] = std::minmax(directed[i].first, directed[i].second);
    }
    std::sort(undirected.begin(), undirected.end());
    if (std::unique(undirected.begin(), undirected.end()) - undirected.begin() < 3) {
        return TripleCategory::wedge;
    }
    // Three distinct pairs on three nodes: a cycle iff every node is a source exactly once.
    std::array<NodeIndex, 3> sources{e1.source, e2.source, e3.source};
    std::sort(sources.begin(), sources.end());
    const bool cyclic = std::unique(sources.begin(), sources.end()) - sources.begin() == 3;
    return cyclic ? TripleCategory::cyclic_triangle : TripleCategory::acyclic_triangle;
}

TripleClass classify_triple(const Event& e1, const Event& e2, const Event& e3) {
    std::array<NodeIndex, 6> nodes{e1.source, e1.target, e2.source, e2.target, e3.source, e3.target};
    std::sort(nodes.begin(), nodes.end());
    if (std::unique(nodes.begin(), nodes.end()) - nodes.begin() > 3) {
        throw MotifError("3-event motifs with more than three nodes are out of scope");
    }
    return TripleClass{classify_pair(e1, e2), classify_pair(e2, e3)};
}

std::span<const std::string_view> pair_role_labels(PairClass c) {
    switch (c) {
        case PairClass::R:
        case PairClass::P: return kTwoNodeRoles;
        case PairClass::I: return kInBurstRoles;
        case PairClass::O: return kOutBurstRoles;
        case PairClass::C: return kConveyRoles;
        case PairClass::W: return kWeakRoles;
    }
    return kTwoNodeRoles;
}

std::size_t pair_role_nodes(PairClass c, const Event& e1, const Event& e2, std::array<NodeIndex, 3>& roles) {
    switch (c) {
        case PairClass::R:
        case PairClass::P: roles = {e1.source, e1.target, 0}; return 2;
        case PairClass::I: roles = {e1.source, e2.source, e1.target}; return 3;
        case PairClass::O: roles = {e1.source, e1.target, e2.target}; return 3;
        case PairClass::C: roles = {e1.source, e1.target, e2.target}; return 3;
        case PairClass::W: roles = {e1.source, e1.target, e2.source}; return 3;
    }
    return 0;
}

std::span<const std::string_view> triple_role_labels(const TripleClass& c) {
    return std::span<const std::string_view>(kTripleRoles).first(static_cast<std::size_t>(c.node_count()));
}

std::size_t triple_role_nodes(const Event& e1, const Event& e2, const Event& e3, std::array<NodeIndex, 3>& roles) {
    roles = {e1.source, e1.target, 0};
    std::size_t n = 2;
    for (const Event* e : {&e2, &e3}) {
        for (NodeIndex v : {e->source, e->target}) {
            if (v != roles[0] && v != roles[1] && (n < 3 || v != roles[2])) {
                if (n == 3) throw MotifError("events span more than three nodes");
                roles[n++] = v;
            }
        }
    }
    return n;
}

std::string class_label(MotifSize size, std::size_t index) {
    if (size == MotifSize::pair) {
        if (index >= kPairClassCount) throw MotifError("pair class index out of range");
        return std::string(1, pair_label(kPairClasses[index]));
    }
    return TripleClass::from_index(index).label();
}

std::size_t class_count(MotifSize size) { return size == MotifSize::pair ? kPairClassCount : kTripleClassCount; }

}  // namespace tmotif
