#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tmotif/network.hpp"

namespace tmotif {

class MotifError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Relation between two time-ordered events that share at least one node.
///   R  repetition       same source, same target
///   P  ping-pong        reversed direction
///   I  in-burst         same target, different sources
///   O  out-burst        same source, different targets
///   C  convey           second source is the first target
///   W  weakly-connected second target is the first source
enum class PairClass : std::uint8_t { R = 0, P = 1, I = 2, O = 3, C = 4, W = 5 };

inline constexpr std::array<PairClass, 6> kPairClasses{PairClass::R, PairClass::P, PairClass::I,
                                                       PairClass::O, PairClass::C, PairClass::W};
inline constexpr std::size_t kPairClassCount = 6;
inline constexpr std::size_t kTripleClassCount = 36;

char pair_label(PairClass c);
PairClass pair_class_from_label(char label);
inline bool is_two_node(PairClass c) { return c == PairClass::R || c == PairClass::P; }

enum class TripleCategory { two_node, wedge, acyclic_triangle, cyclic_triangle };

std::string_view category_name(TripleCategory category);

/// A 3-event motif written as the class of events (1,2) followed by the class
/// of events (2,3).
struct TripleClass {
    PairClass first = PairClass::R;
    PairClass second = PairClass::R;

    static TripleClass from_index(std::size_t index);
    std::size_t index() const { return static_cast<std::size_t>(first) * 6 + static_cast<std::size_t>(second); }
    std::string label() const;
    int node_count() const { return is_two_node(first) && is_two_node(second) ? 2 : 3; }
    TripleCategory category() const;

    friend bool operator==(const TripleClass&, const TripleClass&) = default;
};

/// Requires t1 < t2 and at least one shared node; throws MotifError otherwise.
PairClass classify_pair(const Event& e1, const Event& e2);

/// Requires t1 < t2 < t3 spanning at most three nodes; throws MotifError otherwise.
TripleClass classify_triple(const Event& e1, const Event& e2, const Event& e3);

/// Category of the undirected static projection of three events on <= 3 nodes.
TripleCategory projection_category(const Event& e1, const Event& e2, const Event& e3);

/// Canonical node-role labels for a 2-event class, in role order.
std::span<const std::string_view> pair_role_labels(PairClass c);

/// Nodes occupying each canonical role of a classified event pair, in the
/// order of pair_role_labels. Returns the number of roles filled (2 or 3).
std::size_t pair_role_nodes(PairClass c, const Event& e1, const Event& e2, std::array<NodeIndex, 3>& roles);

/// 3-event motifs label their nodes by first appearance: source of the first
/// event, its target, then the remaining node.
std::span<const std::string_view> triple_role_labels(const TripleClass& c);
std::size_t triple_role_nodes(const Event& e1, const Event& e2, const Event& e3, std::array<NodeIndex, 3>& roles);

/// Number of events in a motif.
enum class MotifSize { pair = 2, triple = 3 };

inline int event_count(MotifSize size) { return static_cast<int>(size); }
/// 6 pair classes or 36 triple classes.
std::size_t class_count(MotifSize size);
std::string class_label(MotifSize size, std::size_t index);

}  // namespace tmotif
