#pragma once

#include <cstdint>
#include <string>

#include "tmotif/network.hpp"

namespace tmotif {

/// Desk-scale synthetic stand-in for a patent opposition/collaboration
/// dataset.
///
/// Node out- and in-activity are continuous power laws with exponent
/// `activity_exponent`; a fresh opposition picks its source by out-activity
/// and its target by in-activity, at a uniform day of the span. With
/// probability `burst_prob` an opposition instead follows one of the last 50
/// generated events 1-180 days later: half the time on the same edge, else
/// sharing its source or its target. Collaborations pair two companies
/// opposed by the same opposer half the time, otherwise two companies drawn
/// by in-activity. Patent counts follow a power law with exponent
/// `attr_exponent`, scaled so the median lands in the tens and capped at
/// 500,000.
struct SynthConfig {
    std::uint64_t node_count = 1000;
    std::uint64_t opposition_events = 3000;
    std::uint64_t collaboration_events = 300;
    Day span_days = 37 * kDaysPerYear;
    Day start_day = 4018;  ///< 1981-01-01
    double activity_exponent = 2.5;
    double burst_prob = 0.2;
    double attr_exponent = 1.8;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct SynthData {
    TemporalLayer opposition;
    TemporalLayer collaboration;
    AttributeMap attributes;

    TwoLayerNetwork network() const { return TwoLayerNetwork::build(opposition, collaboration, attributes); }
};

SynthData generate_synthetic(const SynthConfig& config);

/// Writes opposition.csv, collaboration.csv and attributes.csv into `dir`,
/// creating it if needed.
void write_synthetic(const SynthData& data, const std::string& dir);

}  // namespace tmotif
