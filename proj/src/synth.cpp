#include "tmotif/synth.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

#include "tmotif/event_io.hpp"
#include "tmotif/random.hpp"

namespace tmotif {

namespace {

constexpr std::size_t kRecentWindow = 50;
constexpr Day kMaxBurstGap = 180;
constexpr double kAttributeScale = 20.0;
constexpr double kAttributeCap = 500000.0;

double pareto(Rng& rng, double exponent) { return std::pow(1.0 - rng.unit(), -1.0 / (exponent - 1.0)); }

/// Index drawn with probability proportional to its weight.
class WeightedPicker {
public:
    explicit WeightedPicker(const std::vector<double>& weights) : cumulative_(weights.size()) {
        double total = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) cumulative_[i] = total += weights[i];
    }

    NodeIndex pick(Rng& rng) const {
        const double x = rng.unit() * cumulative_.back();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
        return static_cast<NodeIndex>(std::min<std::size_t>(it - cumulative_.begin(), cumulative_.size() - 1));
    }

private:
    std::vector<double> cumulative_;
};

}  // namespace

void SynthConfig::validate() const {
    if (node_count < 3) throw std::invalid_argument("synthetic networks need at least 3 nodes");
    if (opposition_events == 0) throw std::invalid_argument("opposition event count must be positive");
    if (collaboration_events == 0) throw std::invalid_argument("collaboration event count must be positive");
    if (span_days <= 0) throw std::invalid_argument("span must be positive");
    if (!(activity_exponent > 1.0) || !(attr_exponent > 1.0)) {
        throw std::invalid_argument("power-law exponents must exceed 1");
    }
    if (!(burst_prob >= 0.0 && burst_prob <= 1.0)) throw std::invalid_argument("burst probability must be in [0, 1]");
}

SynthData generate_synthetic(const SynthConfig& config) {
    config.validate();
    Rng rng(config.seed);
    const auto n = config.node_count;
    const auto width = fmt::format("{}", n - 1).size();

    std::vector<std::string> names(n);
    for (std::uint64_t i = 0; i < n; ++i) names[i] = fmt::format("C{:0{}}", i, width);
    auto table = std::make_shared<const NodeTable>(names);

    AttributeMap attributes;
    std::vector<double> out_weight(n);
    std::vector<double> in_weight(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double size = std::floor(kAttributeScale * (pareto(rng, config.attr_exponent) - 1.0));
        attributes.emplace(names[i], static_cast<std::uint64_t>(std::min(size, kAttributeCap)));
        out_weight[i] = pareto(rng, config.activity_exponent);
        in_weight[i] = pareto(rng, config.activity_exponent);
    }
    const WeightedPicker opposers(out_weight);
    const WeightedPicker opposed(in_weight);

    const Day first_day = config.start_day;
    const Day last_day = config.start_day + config.span_days - 1;
    auto pick_pair = [&](const WeightedPicker& a, const WeightedPicker& b) {
        const NodeIndex s = a.pick(rng);
        NodeIndex t = b.pick(rng);
        while (t == s) t = b.pick(rng);
        return std::pair{s, t};
    };

    std::vector<Event> ops;
    ops.reserve(config.opposition_events);
    std::vector<std::vector<NodeIndex>> targets_of(n);
    for (std::uint64_t k = 0; k < config.opposition_events; ++k) {
        Event e;
        if (!ops.empty() && rng.unit() < config.burst_prob) {
            const std::size_t lo = ops.size() > kRecentWindow ? ops.size() - kRecentWindow : 0;
            const Event& prev = ops[lo + rng.below(ops.size() - lo)];
            e = Event{prev.source, prev.target, std::min(prev.t + rng.between(1, kMaxBurstGap), last_day)};
            const double variant = rng.unit();
            if (variant >= 0.75) {
                do e.target = opposed.pick(rng); while (e.target == e.source);
            } else if (variant >= 0.5) {
                do e.source = opposers.pick(rng); while (e.source == e.target);
            }
        } else {
            const auto [s, t] = pick_pair(opposers, opposed);
            e = Event{s, t, rng.between(first_day, last_day)};
        }
        targets_of[e.source].push_back(e.target);
        ops.push_back(e);
    }

    std::vector<Event> collabs;
    collabs.reserve(config.collaboration_events);
    for (std::uint64_t k = 0; k < config.collaboration_events; ++k) {
        std::optional<std::pair<NodeIndex, NodeIndex>> pair;
        if (rng.unit() < 0.5) {
            const auto& anchor = ops[rng.below(ops.size())];
            const auto& targets = targets_of[anchor.source];
            const NodeIndex other = targets[rng.below(targets.size())];
            if (other != anchor.target) pair = std::pair{anchor.target, other};
        }
        if (!pair) pair = pick_pair(opposed, opposed);
        collabs.push_back(Event{pair->first, pair->second, rng.between(first_day, last_day)});
    }

    return SynthData{TemporalLayer(LayerKind::opposition, table, std::move(ops)),
                     TemporalLayer(LayerKind::collaboration, table, std::move(collabs)), std::move(attributes)};
}

void write_synthetic(const SynthData& data, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream out(fs::path(dir) / name);
        if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", (fs::path(dir) / name).string()));
        return out;
    };
    auto ops = open("opposition.csv");
    write_event_file(ops, data.opposition);
    auto collab = open("collaboration.csv");
    write_event_file(collab, data.collaboration);
    auto attrs = open("attributes.csv");
    write_attribute_file(attrs, data.attributes);
}

}  // namespace tmotif
