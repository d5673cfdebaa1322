#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tmotif/motif_class.hpp"
#include "tmotif/network.hpp"

namespace tmotif {

/// Timing thresholds of a temporal motif. An empty bound means unbounded.
///   delta_c bounds the gap between consecutive events that share a node.
///   delta_w bounds the time between the first and last event.
class Thresholds {
public:
    Thresholds() = default;
    /// Throws MotifError on negative bounds or delta_c > delta_w.
    Thresholds(std::optional<Day> delta_c, std::optional<Day> delta_w);

    static Thresholds unbounded() { return {}; }
    static Thresholds both(Day delta) { return Thresholds(delta, delta); }

    std::optional<Day> delta_c() const { return delta_c_; }
    std::optional<Day> delta_w() const { return delta_w_; }

private:
    std::optional<Day> delta_c_;
    std::optional<Day> delta_w_;
};

/// One occurrence of a temporal motif in an opposition layer.
struct MotifInstance {
    MotifSize size = MotifSize::pair;
    std::array<std::size_t, 3> event_ids{};  ///< indices into TemporalLayer::events()
    std::array<Event, 3> events{};
    std::size_t class_index = 0;  ///< PairClass value or TripleClass::index()
    std::array<NodeIndex, 3> roles{};
    std::size_t role_count = 0;

    std::span<const Event> event_span() const { return {events.data(), static_cast<std::size_t>(size)}; }
    Day first_time() const { return events[0].t; }
    Day last_time() const { return events[static_cast<std::size_t>(size) - 1].t; }
    std::string class_label() const { return tmotif::class_label(size, class_index); }
    std::span<const std::string_view> role_labels() const;
};

/// True when the time-ordered events satisfy the timing constraints of a
/// motif: strictly increasing timestamps, consecutive node-sharing gaps within
/// delta_c and total span within delta_w. Connectivity is not checked.
bool satisfies_timing(std::span<const Event> events, const Thresholds& th);

/// Visits every motif instance of the layer in deterministic order (by first,
/// then second, then third event index).
void for_each_motif(const TemporalLayer& layer, MotifSize size, const Thresholds& th,
                    const std::function<void(const MotifInstance&)>& visit);

std::vector<MotifInstance> enumerate_motifs(const TemporalLayer& layer, MotifSize size, const Thresholds& th);

struct CensusResult {
    MotifSize size = MotifSize::pair;
    Thresholds config;
    std::optional<std::pair<Day, Day>> bin;  ///< (lower, upper] when the result is one bin
    std::vector<std::uint64_t> counts;       ///< one entry per class, zero-filled

    std::uint64_t total() const;
    std::string label(std::size_t index) const { return class_label(size, index); }
};

/// Counts motif instances per class. Work is split by first event across
/// `threads` workers; the result does not depend on the thread count.
CensusResult census(const TemporalLayer& layer, MotifSize size, const Thresholds& th, unsigned threads = 1);

/// gap: instances binned by their largest consecutive gap, with the time window
///      fixed at the largest boundary.
/// window: delta_c = delta_w; instances binned by their total timespan.
/// For 2-event motifs both modes coincide.
enum class BinMode { gap, window };

/// Boundaries b1 < b2 < ... < bk (b1 > 0) define bins (0, b1], (b1, b2], ...
std::vector<CensusResult> binned_census(const TemporalLayer& layer, MotifSize size, std::span<const Day> boundaries,
                                        BinMode mode, unsigned threads = 1);

}  // namespace tmotif
