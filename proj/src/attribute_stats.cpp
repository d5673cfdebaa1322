#include "tmotif/attribute_stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "tmotif/static_motif.hpp"

namespace tmotif {

namespace {

std::vector<PositionStats> to_stats(std::vector<PositionSamples> samples) {
    std::vector<PositionStats> out;
    out.reserve(samples.size());
    for (auto& s : samples) out.push_back({std::move(s.motif), std::move(s.position), describe(std::move(s.samples))});
    return out;
}

}  // namespace

SampleStats describe(std::vector<std::uint64_t> samples) {
    SampleStats stats;
    stats.count = samples.size();
    if (samples.empty()) return stats;
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (auto x : samples) sum += static_cast<double>(x);
    const double mean = sum / n;
    double ss = 0.0;
    for (auto x : samples) {
        const double d = static_cast<double>(x) - mean;
        ss += d * d;
    }
    stats.mean = mean;
    stats.median = static_cast<double>(samples[(samples.size() - 1) / 2]);
    stats.std = std::sqrt(ss / n);
    stats.min = samples.front();
    stats.max = samples.back();
    return stats;
}

std::vector<PositionSamples> temporal_position_samples(const TwoLayerNetwork& net, const Thresholds& th) {
    net.require_attributes("temporal position statistics");
    std::vector<std::vector<std::vector<std::uint64_t>>> by_class(kPairClassCount);
    std::vector<bool> seen(kPairClassCount, false);
    for (std::size_t c = 0; c < kPairClassCount; ++c) by_class[c].resize(pair_role_labels(kPairClasses[c]).size());

    for_each_motif(net.opposition(), MotifSize::pair, th, [&](const MotifInstance& m) {
        seen[m.class_index] = true;
        for (std::size_t r = 0; r < m.role_count; ++r) {
            if (auto a = net.attribute(m.roles[r])) by_class[m.class_index][r].push_back(*a);
        }
    });

    std::vector<PositionSamples> out;
    for (std::size_t c = 0; c < kPairClassCount; ++c) {
        if (!seen[c]) continue;
        const auto labels = pair_role_labels(kPairClasses[c]);
        for (std::size_t r = 0; r < labels.size(); ++r) {
            out.push_back({class_label(MotifSize::pair, c), std::string(labels[r]), std::move(by_class[c][r])});
        }
    }

    PositionSamples opposer{"all-events", "opposer", {}};
    PositionSamples opposed{"all-events", "opposed", {}};
    for (const auto& e : net.opposition().events()) {
        if (auto a = net.attribute(e.source)) opposer.samples.push_back(*a);
        if (auto a = net.attribute(e.target)) opposed.samples.push_back(*a);
    }
    out.push_back(std::move(opposer));
    out.push_back(std::move(opposed));
    return out;
}

std::vector<PositionSamples> static_position_samples(const TwoLayerNetwork& net) {
    net.require_attributes("static position statistics");
    const auto graph = static_projection(net.opposition());

    // Per pattern: position labels and, for each node slot, the position it feeds.
    struct Layout {
        std::vector<std::string> positions;
        std::array<std::size_t, 3> slot_to_position;
    };
    const std::array<Layout, 4> layouts{
        Layout{{"node"}, {0, 0, 0}},
        Layout{{"center", "leaf"}, {0, 1, 1}},
        Layout{{"center", "leaf"}, {0, 1, 1}},
        Layout{{"source", "center", "sink"}, {0, 1, 2}},
    };
    std::array<std::vector<std::vector<std::uint64_t>>, 4> samples;
    std::array<bool, 4> seen{};
    for (std::size_t p = 0; p < 4; ++p) samples[p].resize(layouts[p].positions.size());

    for_each_static_instance(graph, [&](const StaticInstance& inst) {
        const auto p = static_cast<std::size_t>(inst.pattern);
        seen[p] = true;
        for (std::size_t s = 0; s < inst.node_count; ++s) {
            if (auto a = net.attribute(inst.nodes[s])) samples[p][layouts[p].slot_to_position[s]].push_back(*a);
        }
    });

    std::vector<PositionSamples> out;
    for (auto pattern : kStaticPatterns) {
        const auto p = static_cast<std::size_t>(pattern);
        if (!seen[p]) continue;
        for (std::size_t i = 0; i < layouts[p].positions.size(); ++i) {
            out.push_back({std::string(static_pattern_name(pattern)), layouts[p].positions[i], std::move(samples[p][i])});
        }
    }
    return out;
}

std::vector<PositionStats> position_stats_temporal(const TwoLayerNetwork& net, const Thresholds& th) {
    return to_stats(temporal_position_samples(net, th));
}

std::vector<PositionStats> position_stats_static(const TwoLayerNetwork& net) {
    return to_stats(static_position_samples(net));
}

AttributeDistribution attribute_distribution(const TwoLayerNetwork& net) {
    net.require_attributes("attribute distribution");
    std::vector<std::uint64_t> values;
    for (NodeIndex v = 0; v < net.node_count(); ++v) {
        if (auto a = net.attribute(v)) values.push_back(*a);
    }
    if (values.empty()) throw NetworkError("attribute distribution requires at least one attributed node");

    AttributeDistribution dist;
    const auto largest = *std::max_element(values.begin(), values.end());
    const auto bins = static_cast<std::size_t>(std::bit_width(largest)) + 1;
    for (std::size_t k = 0; k < bins; ++k) {
        const std::uint64_t lower = k == 0 ? 0 : std::uint64_t{1} << (k - 1);
        const std::uint64_t upper = k == 0 ? 0 : (std::uint64_t{1} << (k - 1)) * 2 - 1;
        dist.histogram.push_back({lower, upper, 0});
    }
    for (auto x : values) ++dist.histogram[static_cast<std::size_t>(std::bit_width(x))].count;
    dist.summary = describe(std::move(values));
    return dist;
}

}  // namespace tmotif
