#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tmotif/network.hpp"

namespace tmotif {

/// Randomized reference models for a directed temporal layer.
///   ls    link shuffling: uniform simple graph with the same node and edge
///         counts; edge timelines reassigned by a uniform bijection.
///   dcls  degree-constrained link shuffling: directed double-edge swaps;
///         each timeline stays with its edge's source.
///   wts   weight-constrained timeline shuffling: per-edge timestamps redrawn
///         uniformly on the layer's observation window.
///   is    inter-event shuffling: per-edge gaps permuted, first and last
///         timestamps fixed.
///   ts    timestamp shuffling: all timestamps permuted across events.
enum class NullModel { ls, dcls, wts, is, ts };

inline constexpr NullModel kNullModels[] = {NullModel::ls, NullModel::dcls, NullModel::wts, NullModel::is,
                                            NullModel::ts};

std::string_view null_model_name(NullModel model);
/// Accepts the lowercase names above; throws std::invalid_argument otherwise.
NullModel parse_null_model(std::string_view name);

struct ShuffleOptions {
    /// Accepted DCLS swaps per distinct edge.
    std::uint64_t swaps_per_edge = 10;
    /// DCLS gives up after this many attempts per requested swap, which only
    /// happens on graphs with (almost) no valid swaps.
    std::uint64_t attempts_per_swap = 100;
};

/// Returns a randomized copy of the layer over the same node table. Pure
/// function of (layer, model, seed, options). An empty layer is returned
/// unchanged; LS throws NetworkError when the edge count exceeds n(n-1).
TemporalLayer shuffle(const TemporalLayer& layer, NullModel model, std::uint64_t seed,
                      const ShuffleOptions& options = {});

struct ConservationLaw {
    std::string name;
    bool passed = false;
};

struct ConservationReport {
    std::vector<ConservationLaw> laws;
    bool all_passed() const;
};

/// Checks the conservation laws that `model` promises between an original
/// layer and a randomized one.
ConservationReport verify_conservation(const TemporalLayer& original, const TemporalLayer& shuffled, NullModel model);

}  // namespace tmotif
