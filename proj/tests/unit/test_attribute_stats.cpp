#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "tmotif/attribute_stats.hpp"

using namespace tmotif;

namespace {

const PositionStats& find(const std::vector<PositionStats>& rows, const std::string& motif, const std::string& pos) {
    for (const auto& r : rows)
        if (r.motif == motif && r.position == pos) return r;
    throw std::logic_error("missing " + motif + "/" + pos);
}

TwoLayerNetwork with_attrs(const TemporalLayer& opp, AttributeMap attrs) {
    return TwoLayerNetwork::build(opp, TemporalLayer(LayerKind::collaboration), std::move(attrs));
}

}  // namespace

TEST_SUITE("attribute-stats") {
    TEST_CASE("describe") {
        auto s = describe({20, 0, 10});
        CHECK(s.count == 3);
        CHECK(*s.mean == 10.0);
        CHECK(*s.median == 10.0);
        CHECK(*s.min == 0);
        CHECK(*s.max == 20);
        CHECK(*s.std == doctest::Approx(std::sqrt(200.0 / 3.0)));

        auto even = describe({4, 1, 3, 2});
        CHECK(*even.median == 2.0);

        auto one = describe({7});
        CHECK(*one.median == 7.0);
        CHECK(*one.std == 0.0);

        auto none = describe({});
        CHECK(none.count == 0);
        CHECK_FALSE(none.mean.has_value());
        CHECK_FALSE(none.median.has_value());
    }

    TEST_CASE("attribute distribution") {
        auto net = TwoLayerNetwork::build(TemporalLayer(LayerKind::opposition), TemporalLayer(LayerKind::collaboration),
                                          AttributeMap{{"A", 0}, {"B", 10}, {"C", 20}});
        auto d = attribute_distribution(net);
        CHECK(*d.summary.mean == 10.0);
        CHECK(*d.summary.median == 10.0);
        CHECK(*d.summary.min == 0);
        CHECK(*d.summary.max == 20);
        REQUIRE(d.histogram.size() == 6);  // {0} {1} [2,3] [4,7] [8,15] [16,31]
        CHECK(d.histogram[0].count == 1);
        CHECK(d.histogram[4].lower == 8);
        CHECK(d.histogram[4].upper == 15);
        CHECK(d.histogram[4].count == 1);
        CHECK(d.histogram[5].count == 1);

        auto single = TwoLayerNetwork::build(TemporalLayer(LayerKind::opposition),
                                             TemporalLayer(LayerKind::collaboration), AttributeMap{{"A", 1}});
        auto sd = attribute_distribution(single);
        CHECK(sd.summary.count == 1);
        CHECK(*sd.summary.std == 0.0);

        CHECK_THROWS_AS(attribute_distribution(fixture::toy_network()), NetworkError);
    }

    TEST_CASE("single repetition") {
        auto net = with_attrs(fixture::opp({{"A", "B", 1}, {"A", "B", 2}}), {{"A", 5}, {"B", 7}});
        auto rows = position_stats_temporal(net, Thresholds::both(3650));
        const auto& src = find(rows, "R", "first-source");
        CHECK(src.stats.count == 1);
        CHECK(*src.stats.mean == 5.0);
        CHECK(*src.stats.median == 5.0);
        CHECK(*src.stats.std == 0.0);
        CHECK(*find(rows, "R", "first-target").stats.mean == 7.0);
        CHECK(find(rows, "all-events", "opposer").stats.count == 2);
    }

    TEST_CASE("nodes without attributes are left out") {
        auto net = with_attrs(fixture::opp({{"A", "B", 1}, {"A", "B", 2}}), {{"A", 5}});
        auto rows = position_stats_temporal(net, Thresholds::unbounded());
        CHECK(find(rows, "R", "first-source").stats.count == 1);
        CHECK(find(rows, "R", "first-target").stats.count == 0);
        CHECK_FALSE(find(rows, "R", "first-target").stats.mean.has_value());
    }

    TEST_CASE("per-instance accumulation") {
        // two in-bursts onto C: (A,C,1),(B,C,2) and (B,C,2),(D,C,3), plus (A,C,1),(D,C,3)
        auto net = with_attrs(fixture::opp({{"A", "C", 1}, {"B", "C", 2}, {"D", "C", 3}}),
                              {{"A", 1}, {"B", 2}, {"C", 9}, {"D", 4}});
        auto rows = position_stats_temporal(net, Thresholds(1, 2));
        const auto& opposed = find(rows, "I", "opposed");
        CHECK(opposed.stats.count == 2);
        CHECK(*opposed.stats.mean == 9.0);
    }

    TEST_CASE("analyses need attributes") {
        CHECK_THROWS_AS(position_stats_temporal(fixture::toy_network(), Thresholds::unbounded()), NetworkError);
        CHECK_THROWS_AS(position_stats_static(fixture::toy_network()), NetworkError);
    }

    TEST_CASE("static positions") {
        auto in = with_attrs(fixture::opp({{"A", "C", 1}, {"B", "C", 2}}), {{"A", 1}, {"B", 3}, {"C", 10}});
        auto rows = position_stats_static(in);
        const auto& leaf = find(rows, "in-burst", "leaf");
        CHECK(leaf.stats.count == 2);
        CHECK(*leaf.stats.mean == 2.0);
        CHECK(*find(rows, "in-burst", "center").stats.mean == 10.0);

        auto mutual = with_attrs(fixture::opp({{"A", "B", 1}, {"B", "A", 2}}), {{"A", 2}, {"B", 4}});
        const auto& node = find(position_stats_static(mutual), "mutual", "node");
        CHECK(node.stats.count == 2);
        CHECK(*node.stats.mean == 3.0);

        auto empty = with_attrs(TemporalLayer(LayerKind::opposition), {{"A", 1}});
        CHECK(position_stats_static(empty).empty());

        auto path = with_attrs(fixture::opp({{"A", "B", 1}, {"B", "C", 2}}), {{"A", 1}, {"B", 2}, {"C", 3}});
        auto p = position_stats_static(path);
        CHECK(*find(p, "path", "source").stats.mean == 1.0);
        CHECK(*find(p, "path", "center").stats.mean == 2.0);
        CHECK(*find(p, "path", "sink").stats.mean == 3.0);
    }

    TEST_CASE("property: statistics match a naive recomputation") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            auto opp = gen::random_layer(rng, {.max_events = 50, .max_nodes = 10});
            AttributeMap attrs;
            bool full = trial % 2 == 0;
            for (auto name : opp.node_table()->names()) {
                auto a = gen::random_attribute(rng);
                if (full && !a) a = 0;
                if (a) attrs[name] = *a;
            }
            auto net = with_attrs(opp, attrs);
            auto th = Thresholds::both(static_cast<Day>(gen::uniform(rng, 1, 200)));
            for (const auto& samples :
                 {temporal_position_samples(net, th), static_position_samples(net)}) {
                std::map<std::string, std::size_t> per_class_count;
                for (const auto& s : samples) {
                    auto stats = describe(s.samples);
                    auto sorted = s.samples;
                    std::sort(sorted.begin(), sorted.end());
                    CHECK(stats.count == sorted.size());
                    if (sorted.empty()) continue;
                    long double sum = 0;
                    for (auto x : sorted) sum += x;
                    double mean = static_cast<double>(sum / sorted.size());
                    double ss = 0;
                    for (auto x : sorted) ss += (static_cast<double>(x) - mean) * (static_cast<double>(x) - mean);
                    CHECK(*stats.median == static_cast<double>(sorted[(sorted.size() - 1) / 2]));
                    CHECK(*stats.mean == doctest::Approx(mean).epsilon(1e-15));
                    CHECK(*stats.std == doctest::Approx(std::sqrt(ss / sorted.size())).epsilon(1e-12));
                }
                if (full) {
                    // with every node attributed, all positions of a temporal class
                    // have one sample per instance
                    for (const auto& s : samples) {
                        if (s.motif == "all-events" || s.motif == "mutual" || s.position == "leaf") continue;
                        auto [it, fresh] = per_class_count.emplace(s.motif, s.samples.size());
                        if (!fresh) CHECK(it->second == s.samples.size());
                    }
                }
            }
        }
    }
}
