#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tmotif/motif_engine.hpp"

namespace tmotif {

inline constexpr Day kDefaultPad = 10 * kDaysPerYear;

/// Position of a collaboration relative to a 2-event motif (t1, t2):
/// before t < t1, between t1 <= t <= t2, after t > t2.
enum class CollabTiming : std::uint8_t { before = 0, between = 1, after = 2 };

std::string_view timing_name(CollabTiming timing);
CollabTiming classify_timing(Day t, Day first, Day last);

/// Unordered pair of role positions of a motif; pairs are numbered
/// 0 = {0,1}, 1 = {0,2}, 2 = {1,2}.
inline constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kRolePairs{
    std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}};

/// Number of role pairs of a motif with `role_count` nodes (1 or 3).
inline std::size_t role_pair_count(std::size_t role_count) { return role_count == 2 ? 1 : 3; }

/// "first-opposer:opposed" style label of a role pair of a motif class.
std::string role_pair_label(MotifSize size, std::size_t class_index, std::size_t pair_index);

struct OverlayRecord {
    Event collab;                       ///< collaboration event, source < target
    std::size_t pair_index = 0;         ///< index into kRolePairs
    std::optional<CollabTiming> timing;  ///< 2-event motifs only
};

struct OverlayInstance {
    MotifInstance motif;
    std::vector<OverlayRecord> records;  ///< ordered by pair, then time
};

/// Visits every opposition motif with the collaborations between its nodes
/// that fall in [t_first - pad, t_last + pad].
void for_each_overlay(const TwoLayerNetwork& net, MotifSize size, const Thresholds& th, Day pad,
                      const std::function<void(const OverlayInstance&)>& visit);

std::vector<OverlayInstance> attach_collaborations(const TwoLayerNetwork& net, MotifSize size, const Thresholds& th,
                                                   Day pad = kDefaultPad);

/// How before/after interval lengths are measured for per-year normalization:
///   clipped    min(pad, distance to the collaboration layer's first/last event)
///   unclipped  always pad
enum class IntervalClip { clipped, unclipped };

struct CountRow {
    std::string motif;
    std::uint64_t instances = 0;
    std::optional<std::array<double, 4>> fractions;  ///< 0, 1, 2, 3+ collaborations
};

struct PairFractionRow {
    std::string motif;
    std::uint64_t collaborations = 0;
    std::array<std::string, 3> pairs;
    std::optional<std::array<double, 3>> fractions;
};

struct TimingRow {
    std::string motif;
    std::string pair;
    std::uint64_t records = 0;
    std::optional<std::array<double, 3>> fractions;  ///< before, between, after
};

struct PerYearRow {
    std::string motif;
    std::string pair;
    std::array<std::optional<double>, 3> per_year;           ///< before, between, after
    std::array<std::optional<double>, 3> mean_length_years;  ///< per class and interval
};

/// Streaming aggregation of overlay instances into the count, pair and
/// timing tables.
class OverlayTally {
public:
    OverlayTally(MotifSize size, Day pad, std::optional<std::pair<Day, Day>> collab_span,
                 IntervalClip clip = IntervalClip::clipped);

    void add(const OverlayInstance& instance);

    /// Interval lengths (days) of a 2-event motif: before, between, after.
    std::array<Day, 3> interval_lengths(Day first, Day last) const;

    std::vector<CountRow> count_distribution() const;
    /// 3-node 2-event classes (I, O, C, W); empty for 3-event tallies.
    std::vector<PairFractionRow> pair_fractions() const;
    std::vector<TimingRow> timing_fractions() const;
    std::vector<PerYearRow> timing_per_year() const;

private:
    struct ClassTally {
        std::uint64_t instances = 0;
        std::array<std::uint64_t, 4> by_count{};
        std::array<std::uint64_t, 3> by_pair{};
        std::array<std::array<std::uint64_t, 3>, 3> timing{};  ///< [pair][timing]
        std::array<std::int64_t, 3> length_sum{};               ///< days, per interval
    };

    std::vector<std::size_t> timed_classes() const;

    MotifSize size_;
    Day pad_;
    std::optional<std::pair<Day, Day>> collab_span_;
    IntervalClip clip_;
    std::vector<ClassTally> classes_;
};

}  // namespace tmotif
