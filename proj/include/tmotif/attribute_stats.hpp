#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmotif/motif_engine.hpp"
#include "tmotif/network.hpp"

namespace tmotif {

/// Summary of an integer sample. Median is the lower-middle element of the
/// sorted sample; std is the population standard deviation. All fields are
/// empty for an empty sample.
struct SampleStats {
    std::size_t count = 0;
    std::optional<double> mean;
    std::optional<double> median;
    std::optional<double> std;
    std::optional<std::uint64_t> min;
    std::optional<std::uint64_t> max;
};

SampleStats describe(std::vector<std::uint64_t> samples);

/// Attribute values of the nodes found at one position of one motif class,
/// accumulated once per motif instance. Nodes without attributes are skipped.
struct PositionSamples {
    std::string motif;
    std::string position;
    std::vector<std::uint64_t> samples;
};

struct PositionStats {
    std::string motif;
    std::string position;
    SampleStats stats;
};

/// 2-event motif positions for every class with at least one instance,
/// followed by the baseline "all-events" opposer/opposed rows over every
/// opposition event.
std::vector<PositionSamples> temporal_position_samples(const TwoLayerNetwork& net, const Thresholds& th);

/// Static pattern positions: mutual {node}; in-burst and out-burst
/// {center, leaf} with both leaves pooled; path {source, center, sink}.
std::vector<PositionSamples> static_position_samples(const TwoLayerNetwork& net);

std::vector<PositionStats> position_stats_temporal(const TwoLayerNetwork& net, const Thresholds& th);
std::vector<PositionStats> position_stats_static(const TwoLayerNetwork& net);

/// Histogram bin [lower, upper] of attribute values.
struct HistogramBin {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::uint64_t count = 0;
};

/// Logarithmic bins {0}, {1}, [2,3], [4,7], ... up to the bin holding the
/// largest value, plus a summary of all known attribute values.
struct AttributeDistribution {
    std::vector<HistogramBin> histogram;
    SampleStats summary;
};

AttributeDistribution attribute_distribution(const TwoLayerNetwork& net);

}  // namespace tmotif
