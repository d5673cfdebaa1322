#include "tmotif/motif_engine.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

#include <fmt/format.h>

namespace tmotif {

namespace {

constexpr Day kForever = std::numeric_limits<Day>::max() / 4;

Day bound_of(std::optional<Day> d) { return d ? *d : kForever; }

Day add_bound(Day t, Day delta) { return delta >= kForever ? kForever : t + delta; }

/// Number of timestamps in (lo, hi] of a sorted list.
std::uint64_t count_in(const std::vector<Day>& times, Day lo, Day hi) {
    if (hi <= lo) return 0;
    auto first = std::upper_bound(times.begin(), times.end(), lo);
    auto last = std::upper_bound(first, times.end(), hi);
    return static_cast<std::uint64_t>(last - first);
}

std::uint64_t count_in(const Edge* edge, Day lo, Day hi) { return edge ? count_in(edge->times, lo, hi) : 0; }

inline bool touches(const Event& e, NodeIndex v) { return e.source == v || e.target == v; }

/// Classification of an event pair already known to be valid.
inline PairClass pair_class_of(const Event& e1, const Event& e2) {
    if (e1.source == e2.source) return e1.target == e2.target ? PairClass::R : PairClass::O;
    if (e1.source == e2.target) return e1.target == e2.source ? PairClass::P : PairClass::W;
    if (e1.target == e2.target) return PairClass::I;
    return PairClass::C;
}

/// Per-node adjacency used by enumeration and counting.
class LayerIndex {
public:
    explicit LayerIndex(const TemporalLayer& layer) : layer_(layer) {
        const auto n = layer.node_count();
        incident_.resize(n);
        out_times_.resize(n);
        in_times_.resize(n);
        const auto events = layer.events();
        for (std::size_t i = 0; i < events.size(); ++i) {
            const auto& e = events[i];
            incident_[e.source].push_back(static_cast<std::uint32_t>(i));
            incident_[e.target].push_back(static_cast<std::uint32_t>(i));
            out_times_[e.source].push_back(e.t);
            in_times_[e.target].push_back(e.t);
        }
    }

    const TemporalLayer& layer() const { return layer_; }
    const Event& event(std::size_t i) const { return layer_.events()[i]; }
    const std::vector<Day>& out_times(NodeIndex v) const { return out_times_[v]; }
    const std::vector<Day>& in_times(NodeIndex v) const { return in_times_[v]; }
    const Edge* edge(NodeIndex s, NodeIndex t) const { return layer_.find_edge(s, t); }

    /// Calls f(event_id) for every event incident to `v` with time in (lo, hi],
    /// in event order.
    template <typename F>
    void scan_incident(NodeIndex v, Day lo, Day hi, F&& f) const {
        const auto& ids = incident_[v];
        auto it = std::upper_bound(ids.begin(), ids.end(), lo,
                                   [&](Day t, std::uint32_t id) { return t < event(id).t; });
        for (; it != ids.end() && event(*it).t <= hi; ++it) f(*it);
    }

    /// Events after `lo` and up to `hi` that share a node with `e`, in event order.
    void collect_adjacent(const Event& e, Day lo, Day hi, std::vector<std::uint32_t>& out) const {
        out.clear();
        scan_incident(e.source, lo, hi, [&](std::uint32_t id) { out.push_back(id); });
        scan_incident(e.target, lo, hi, [&](std::uint32_t id) {
            if (!touches(event(id), e.source)) out.push_back(id);
        });
        std::sort(out.begin(), out.end());
    }

private:
    const TemporalLayer& layer_;
    std::vector<std::vector<std::uint32_t>> incident_;
    std::vector<std::vector<Day>> out_times_;
    std::vector<std::vector<Day>> in_times_;
};

/// Adds counts of third events following (e1, e2), keyed by the class of (e2, e3).
/// `row` points at the 6 counters of the (e1, e2) class.
void count_third(const LayerIndex& index, const Event& e1, const Event& e2, PairClass first, Day lo, Day hi,
                 std::uint64_t* row) {
    if (hi <= lo) return;
    const NodeIndex a = e2.source;
    const NodeIndex b = e2.target;
    const auto forward = count_in(index.edge(a, b), lo, hi);
    const auto backward = count_in(index.edge(b, a), lo, hi);
    row[static_cast<std::size_t>(PairClass::R)] += forward;
    row[static_cast<std::size_t>(PairClass::P)] += backward;
    if (is_two_node(first)) {
        // Any third node is allowed.
        row[static_cast<std::size_t>(PairClass::I)] += count_in(index.in_times(b), lo, hi) - forward;
        row[static_cast<std::size_t>(PairClass::O)] += count_in(index.out_times(a), lo, hi) - forward;
        row[static_cast<std::size_t>(PairClass::C)] += count_in(index.out_times(b), lo, hi) - backward;
        row[static_cast<std::size_t>(PairClass::W)] += count_in(index.in_times(a), lo, hi) - backward;
        return;
    }
    // The third node is fixed by the first two events.
    NodeIndex c = e1.source;
    if (c == a || c == b) c = e1.target;
    row[static_cast<std::size_t>(PairClass::I)] += count_in(index.edge(c, b), lo, hi);
    row[static_cast<std::size_t>(PairClass::O)] += count_in(index.edge(a, c), lo, hi);
    row[static_cast<std::size_t>(PairClass::C)] += count_in(index.edge(b, c), lo, hi);
    row[static_cast<std::size_t>(PairClass::W)] += count_in(index.edge(c, a), lo, hi);
}

void count_from_anchor(const LayerIndex& index, std::size_t i, MotifSize size, Day dc, Day dw,
                       std::vector<std::uint64_t>& counts) {
    const Event& e1 = index.event(i);
    const NodeIndex u = e1.source;
    const NodeIndex v = e1.target;
    const Day hi2 = add_bound(e1.t, std::min(dc, dw));

    if (size == MotifSize::pair) {
        const auto forward = count_in(index.edge(u, v), e1.t, hi2);
        const auto backward = count_in(index.edge(v, u), e1.t, hi2);
        counts[static_cast<std::size_t>(PairClass::R)] += forward;
        counts[static_cast<std::size_t>(PairClass::P)] += backward;
        counts[static_cast<std::size_t>(PairClass::I)] += count_in(index.in_times(v), e1.t, hi2) - forward;
        counts[static_cast<std::size_t>(PairClass::O)] += count_in(index.out_times(u), e1.t, hi2) - forward;
        counts[static_cast<std::size_t>(PairClass::C)] += count_in(index.out_times(v), e1.t, hi2) - backward;
        counts[static_cast<std::size_t>(PairClass::W)] += count_in(index.in_times(u), e1.t, hi2) - backward;
        return;
    }

    const Day window_end = add_bound(e1.t, dw);
    auto visit_second = [&](std::uint32_t j) {
        const Event& e2 = index.event(j);
        const PairClass first = pair_class_of(e1, e2);
        const Day hi3 = std::min(add_bound(e2.t, dc), window_end);
        count_third(index, e1, e2, first, e2.t, hi3, &counts[static_cast<std::size_t>(first) * 6]);
    };
    index.scan_incident(u, e1.t, hi2, visit_second);
    index.scan_incident(v, e1.t, hi2, [&](std::uint32_t j) {
        if (!touches(index.event(j), u)) visit_second(j);
    });
}

}  // namespace

Thresholds::Thresholds(std::optional<Day> delta_c, std::optional<Day> delta_w)
    : delta_c_(delta_c), delta_w_(delta_w) {
    if ((delta_c && *delta_c < 0) || (delta_w && *delta_w < 0)) {
        throw MotifError("timing thresholds must be non-negative");
    }
    if (delta_c && delta_w && *delta_c > *delta_w) {
        throw MotifError(fmt::format("delta_c ({} days) must not exceed delta_w ({} days)", *delta_c, *delta_w));
    }
}

std::span<const std::string_view> MotifInstance::role_labels() const {
    if (size == MotifSize::pair) return pair_role_labels(kPairClasses[class_index]);
    return triple_role_labels(TripleClass::from_index(class_index));
}

bool satisfies_timing(std::span<const Event> events, const Thresholds& th) {
    if (events.size() < 2) return false;
    const Day dc = bound_of(th.delta_c());
    const Day dw = bound_of(th.delta_w());
    for (std::size_t i = 0; i < events.size(); ++i) {
        for (std::size_t j = i + 1; j < events.size(); ++j) {
            if (events[i].t >= events[j].t) return false;
        }
    }
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        const auto& a = events[i];
        const auto& b = events[i + 1];
        const bool share = touches(b, a.source) || touches(b, a.target);
        if (share && b.t - a.t > dc) return false;
    }
    return events.back().t - events.front().t <= dw;
}

void for_each_motif(const TemporalLayer& layer, MotifSize size, const Thresholds& th,
                    const std::function<void(const MotifInstance&)>& visit) {
    if (!layer.directed()) throw MotifError("motifs are enumerated on the directed opposition layer");
    const LayerIndex index(layer);
    const Day dc = bound_of(th.delta_c());
    const Day dw = bound_of(th.delta_w());
    const auto events = layer.events();

    MotifInstance inst;
    inst.size = size;
    std::vector<std::uint32_t> seconds;
    std::vector<std::uint32_t> thirds;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const Event& e1 = events[i];
        index.collect_adjacent(e1, e1.t, add_bound(e1.t, std::min(dc, dw)), seconds);
        for (std::uint32_t j : seconds) {
            const Event& e2 = events[j];
            const PairClass first = pair_class_of(e1, e2);
            if (size == MotifSize::pair) {
                inst.event_ids = {i, j, 0};
                inst.events = {e1, e2, Event{}};
                inst.class_index = static_cast<std::size_t>(first);
                inst.role_count = pair_role_nodes(first, e1, e2, inst.roles);
                visit(inst);
                continue;
            }
            const Day hi3 = std::min(add_bound(e2.t, dc), add_bound(e1.t, dw));
            index.collect_adjacent(e2, e2.t, hi3, thirds);
            for (std::uint32_t k : thirds) {
                const Event& e3 = events[k];
                if (!is_two_node(first)) {
                    // Stay on the three nodes of the first two events.
                    NodeIndex c = e1.source;
                    if (c == e2.source || c == e2.target) c = e1.target;
                    const bool inside = (e3.source == c || e3.source == e2.source || e3.source == e2.target) &&
                                        (e3.target == c || e3.target == e2.source || e3.target == e2.target);
                    if (!inside) continue;
                }
                const TripleClass cls{first, pair_class_of(e2, e3)};
                inst.event_ids = {i, j, k};
                inst.events = {e1, e2, e3};
                inst.class_index = cls.index();
                inst.role_count = triple_role_nodes(e1, e2, e3, inst.roles);
                visit(inst);
            }
        }
    }
}

std::vector<MotifInstance> enumerate_motifs(const TemporalLayer& layer, MotifSize size, const Thresholds& th) {
    std::vector<MotifInstance> out;
    for_each_motif(layer, size, th, [&](const MotifInstance& m) { out.push_back(m); });
    return out;
}

std::uint64_t CensusResult::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

CensusResult census(const TemporalLayer& layer, MotifSize size, const Thresholds& th, unsigned threads) {
    if (!layer.directed()) throw MotifError("census runs on the directed opposition layer");
    const LayerIndex index(layer);
    const Day dc = bound_of(th.delta_c());
    const Day dw = bound_of(th.delta_w());
    const std::size_t n = layer.event_count();
    const std::size_t classes = class_count(size);

    threads = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(classes, 0));
    constexpr std::size_t kBlock = 256;
    std::atomic<std::size_t> next{0};
    auto worker = [&](unsigned w) {
        auto& counts = partial[w];
        while (true) {
            const std::size_t begin = next.fetch_add(kBlock);
            if (begin >= n) break;
            const std::size_t end = std::min(n, begin + kBlock);
            for (std::size_t i = begin; i < end; ++i) count_from_anchor(index, i, size, dc, dw, counts);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    }

    CensusResult result{size, th, std::nullopt, std::vector<std::uint64_t>(classes, 0)};
    for (const auto& counts : partial) {
        for (std::size_t c = 0; c < classes; ++c) result.counts[c] += counts[c];
    }
    return result;
}

std::vector<CensusResult> binned_census(const TemporalLayer& layer, MotifSize size, std::span<const Day> boundaries,
                                        BinMode mode, unsigned threads) {
    if (boundaries.empty()) throw MotifError("bin boundaries must not be empty");
    if (boundaries.front() <= 0) throw MotifError("the first bin boundary must be positive");
    for (std::size_t i = 1; i < boundaries.size(); ++i) {
        if (boundaries[i] <= boundaries[i - 1]) throw MotifError("bin boundaries must be strictly ascending");
    }
    const Day largest = boundaries.back();
    auto thresholds_at = [&](Day b) {
        return mode == BinMode::gap && size == MotifSize::triple ? Thresholds(b, largest) : Thresholds::both(b);
    };

    std::vector<CensusResult> bins;
    std::vector<std::uint64_t> below(class_count(size), 0);
    Day lower = 0;
    for (Day upper : boundaries) {
        auto cumulative = census(layer, size, thresholds_at(upper), threads);
        CensusResult bin{size, thresholds_at(upper), std::pair{lower, upper}, cumulative.counts};
        for (std::size_t c = 0; c < bin.counts.size(); ++c) bin.counts[c] -= below[c];
        below = std::move(cumulative.counts);
        lower = upper;
        bins.push_back(std::move(bin));
    }
    return bins;
}

}  // namespace tmotif
