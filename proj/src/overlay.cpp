#include "tmotif/overlay.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace tmotif {

std::string_view timing_name(CollabTiming timing) {
    switch (timing) {
        case CollabTiming::before: return "before";
        case CollabTiming::between: return "between";
        case CollabTiming::after: return "after";
    }
    return "unknown";
}

CollabTiming classify_timing(Day t, Day first, Day last) {
    if (t < first) return CollabTiming::before;
    if (t > last) return CollabTiming::after;
    return CollabTiming::between;
}

std::string role_pair_label(MotifSize size, std::size_t class_index, std::size_t pair_index) {
    const auto labels = size == MotifSize::pair ? pair_role_labels(kPairClasses.at(class_index))
                                                : triple_role_labels(TripleClass::from_index(class_index));
    const auto [a, b] = kRolePairs.at(pair_index);
    if (b >= labels.size()) throw MotifError("role pair out of range for motif class");
    return fmt::format("{}:{}", labels[a], labels[b]);
}

void for_each_overlay(const TwoLayerNetwork& net, MotifSize size, const Thresholds& th, Day pad,
                      const std::function<void(const OverlayInstance&)>& visit) {
    if (pad < 0) throw std::invalid_argument("overlay padding must be non-negative");
    const auto& collab = net.collaboration();
    OverlayInstance current;
    for_each_motif(net.opposition(), size, th, [&](const MotifInstance& motif) {
        current.motif = motif;
        current.records.clear();
        const Day lo = motif.first_time() - pad;
        const Day hi = motif.last_time() + pad;
        for (std::size_t p = 0; p < role_pair_count(motif.role_count); ++p) {
            const NodeIndex x = motif.roles[kRolePairs[p].first];
            const NodeIndex y = motif.roles[kRolePairs[p].second];
            const Edge* edge = collab.find_edge(x, y);
            if (!edge) continue;
            auto it = std::lower_bound(edge->times.begin(), edge->times.end(), lo);
            for (; it != edge->times.end() && *it <= hi; ++it) {
                OverlayRecord record{Event{edge->source, edge->target, *it}, p, std::nullopt};
                if (size == MotifSize::pair) {
                    record.timing = classify_timing(*it, motif.first_time(), motif.last_time());
                }
                current.records.push_back(record);
            }
        }
        visit(current);
    });
}

std::vector<OverlayInstance> attach_collaborations(const TwoLayerNetwork& net, MotifSize size, const Thresholds& th,
                                                   Day pad) {
    std::vector<OverlayInstance> out;
    for_each_overlay(net, size, th, pad, [&](const OverlayInstance& inst) { out.push_back(inst); });
    return out;
}

OverlayTally::OverlayTally(MotifSize size, Day pad, std::optional<std::pair<Day, Day>> collab_span, IntervalClip clip)
    : size_(size), pad_(pad), collab_span_(collab_span), clip_(clip), classes_(class_count(size)) {}

std::array<Day, 3> OverlayTally::interval_lengths(Day first, Day last) const {
    Day before = pad_;
    Day after = pad_;
    if (clip_ == IntervalClip::clipped) {
        if (collab_span_) {
            before = std::clamp<Day>(first - collab_span_->first, 0, pad_);
            after = std::clamp<Day>(collab_span_->second - last, 0, pad_);
        } else {
            before = after = 0;
        }
    }
    return {before, last - first, after};
}

void OverlayTally::add(const OverlayInstance& instance) {
    const auto& motif = instance.motif;
    if (motif.size != size_) throw MotifError("overlay instance size does not match the tally");
    auto& tally = classes_.at(motif.class_index);
    ++tally.instances;
    ++tally.by_count[std::min<std::size_t>(instance.records.size(), 3)];
    for (const auto& r : instance.records) {
        ++tally.by_pair[r.pair_index];
        if (r.timing) ++tally.timing[r.pair_index][static_cast<std::size_t>(*r.timing)];
    }
    if (size_ == MotifSize::pair) {
        const auto lengths = interval_lengths(motif.first_time(), motif.last_time());
        for (std::size_t i = 0; i < 3; ++i) tally.length_sum[i] += lengths[i];
    }
}

std::vector<CountRow> OverlayTally::count_distribution() const {
    std::vector<CountRow> rows;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        const auto& t = classes_[c];
        CountRow row{class_label(size_, c), t.instances, std::nullopt};
        if (t.instances > 0) {
            std::array<double, 4> f{};
            for (std::size_t b = 0; b < 4; ++b) {
                f[b] = static_cast<double>(t.by_count[b]) / static_cast<double>(t.instances);
            }
            row.fractions = f;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::size_t> OverlayTally::timed_classes() const {
    if (size_ != MotifSize::pair) return {};
    return {static_cast<std::size_t>(PairClass::I), static_cast<std::size_t>(PairClass::O),
            static_cast<std::size_t>(PairClass::C), static_cast<std::size_t>(PairClass::W)};
}

std::vector<PairFractionRow> OverlayTally::pair_fractions() const {
    std::vector<PairFractionRow> rows;
    for (std::size_t c : timed_classes()) {
        const auto& t = classes_[c];
        PairFractionRow row{class_label(size_, c), 0, {}, std::nullopt};
        for (std::size_t p = 0; p < 3; ++p) {
            row.pairs[p] = role_pair_label(size_, c, p);
            row.collaborations += t.by_pair[p];
        }
        if (row.collaborations > 0) {
            std::array<double, 3> f{};
            for (std::size_t p = 0; p < 3; ++p) {
                f[p] = static_cast<double>(t.by_pair[p]) / static_cast<double>(row.collaborations);
            }
            row.fractions = f;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TimingRow> OverlayTally::timing_fractions() const {
    std::vector<TimingRow> rows;
    for (std::size_t c : timed_classes()) {
        const auto& t = classes_[c];
        for (std::size_t p = 0; p < 3; ++p) {
            TimingRow row{class_label(size_, c), role_pair_label(size_, c, p), 0, std::nullopt};
            for (auto n : t.timing[p]) row.records += n;
            if (row.records > 0) {
                std::array<double, 3> f{};
                for (std::size_t k = 0; k < 3; ++k) {
                    f[k] = static_cast<double>(t.timing[p][k]) / static_cast<double>(row.records);
                }
                row.fractions = f;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<PerYearRow> OverlayTally::timing_per_year() const {
    const auto timing = timing_fractions();
    std::vector<PerYearRow> rows;
    std::size_t next = 0;
    for (std::size_t c : timed_classes()) {
        const auto& t = classes_[c];
        std::array<std::optional<double>, 3> mean_years{};
        if (t.instances > 0) {
            for (std::size_t k = 0; k < 3; ++k) {
                mean_years[k] =
                    days_to_years(static_cast<double>(t.length_sum[k]) / static_cast<double>(t.instances));
            }
        }
        for (std::size_t p = 0; p < 3; ++p, ++next) {
            const auto& cell = timing[next];
            PerYearRow row{cell.motif, cell.pair, {}, mean_years};
            if (cell.fractions) {
                for (std::size_t k = 0; k < 3; ++k) {
                    const double f = (*cell.fractions)[k];
                    if (f == 0.0) {
                        row.per_year[k] = 0.0;
                    } else if (mean_years[k] && *mean_years[k] > 0.0) {
                        row.per_year[k] = f / *mean_years[k];
                    }
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace tmotif
