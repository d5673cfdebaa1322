#include <doctest.h>

#include <random>
#include <sstream>

#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "tmotif/dates.hpp"
#include "tmotif/event_io.hpp"
#include "tmotif/network.hpp"

using namespace tmotif;

TEST_SUITE("temporal-core") {
    TEST_CASE("iso dates") {
        CHECK(parse_iso_date("1970-01-01") == 0);
        CHECK(parse_iso_date("1981-02-25") == 4073);
        CHECK(parse_iso_date("1969-12-31") == -1);
        CHECK(format_iso_date(4073) == "1981-02-25");
        CHECK(format_iso_date(parse_iso_date("2018-04-19")) == "2018-04-19");
        CHECK_THROWS_AS(parse_iso_date("1981-2-25"), std::invalid_argument);
        CHECK_THROWS_AS(parse_iso_date("1981-02-30"), std::invalid_argument);
        CHECK_THROWS_AS(parse_iso_date("19810225"), std::invalid_argument);
        CHECK_THROWS_AS(parse_iso_date(""), std::invalid_argument);
    }

    TEST_CASE("durations") {
        CHECK(parse_duration("10y") == 3650);
        CHECK(parse_duration("18m") == 547);
        CHECK(parse_duration("1m") == 30);
        CHECK(parse_duration("100d") == 100);
        CHECK(parse_duration("42") == 42);
        CHECK(parse_duration("0y") == 0);
        CHECK_FALSE(parse_duration("inf").has_value());
        CHECK_FALSE(parse_duration("unbounded").has_value());
        CHECK_THROWS_AS(parse_duration("-1d"), std::invalid_argument);
        CHECK_THROWS_AS(parse_duration("10w"), std::invalid_argument);
        CHECK_THROWS_AS(parse_duration("y"), std::invalid_argument);
        CHECK_THROWS_AS(parse_duration(""), std::invalid_argument);
        CHECK_THROWS_AS(parse_finite_duration("inf"), std::invalid_argument);
        CHECK(parse_finite_duration("2y") == 730);
    }

    TEST_CASE("node table sorts and deduplicates") {
        NodeTable t({"b", "a", "c", "a"});
        REQUIRE(t.size() == 3);
        CHECK(t.name(0) == "a");
        CHECK(t.name(2) == "c");
        CHECK(t.find("b") == NodeIndex{1});
        CHECK_FALSE(t.find("z").has_value());
        CHECK_THROWS_AS(NodeTable({"a", ""}), NetworkError);
    }

    TEST_CASE("directed row parses to one event") {
        std::istringstream in("source,target,date\nA,B,1981-02-25\n");
        auto layer = parse_event_file(in, LayerKind::opposition);
        REQUIRE(layer.event_count() == 1);
        const auto& e = layer.events()[0];
        CHECK(layer.node_name(e.source) == "A");
        CHECK(layer.node_name(e.target) == "B");
        CHECK(e.t == 4073);
    }

    TEST_CASE("undirected rows are normalized") {
        std::istringstream in("node_a,node_b,date\nB,A,2018-01-10\n");
        auto layer = parse_event_file(in, LayerKind::collaboration);
        REQUIRE(layer.event_count() == 1);
        const auto& e = layer.events()[0];
        CHECK(layer.node_name(e.source) == "A");
        CHECK(layer.node_name(e.target) == "B");
        CHECK(e.t == parse_iso_date("2018-01-10"));
        CHECK(layer.find_edge(e.target, e.source) != nullptr);
    }

    TEST_CASE("parse errors name the line") {
        auto line_of = [](const std::string& text, LayerKind kind = LayerKind::opposition) -> std::size_t {
            std::istringstream in(text);
            try {
                parse_event_file(in, kind);
            } catch (const ParseError& e) {
                return e.line();
            }
            return 0;
        };
        CHECK(line_of("source,target,date\nA,B,2000-01-01\nA,A,2000-01-01\n") == 3);
        CHECK(line_of("source,target,date\nA,B,2000-13-01\n") == 2);
        CHECK(line_of("source,target\nA,B\n") == 1);
        CHECK(line_of("source,target,date\nA,B\n") == 2);
        CHECK(line_of("source,target,date\nA,,2000-01-01\n") == 2);
        CHECK(line_of("source,target,date\n\nA,B,2000-01-01\nB,A,oops\n") == 4);
        CHECK(line_of("source,target,date\n", LayerKind::collaboration) == 1);

        std::istringstream blank("");
        CHECK_THROWS_WITH(parse_event_file(blank, LayerKind::opposition), doctest::Contains("missing header"));
        std::istringstream self("source,target,date\nA,A,2000-01-01\n");
        CHECK_THROWS_WITH(parse_event_file(self, LayerKind::opposition), doctest::Contains("self-loop"));
    }

    TEST_CASE("header columns may be reordered and extra columns ignored") {
        std::istringstream in("date, note ,target,source\n2000-01-02,x,B,A\n 2000-01-01 ,y, C , A \n");
        auto layer = parse_event_file(in, LayerKind::opposition);
        REQUIRE(layer.event_count() == 2);
        CHECK(layer.node_name(layer.events()[0].target) == "C");
        CHECK(layer.events()[0].t == parse_iso_date("2000-01-01"));
    }

    TEST_CASE("duplicate rows are kept as distinct events") {
        std::istringstream in("source,target,date\nA,B,2000-01-01\nA,B,2000-01-01\n");
        auto layer = parse_event_file(in, LayerKind::opposition);
        CHECK(layer.event_count() == 2);
        CHECK(layer.edges().size() == 1);
        CHECK(layer.edges()[0].times.size() == 2);
    }

    TEST_CASE("attribute file") {
        std::istringstream ok("node,patent_count\nA,5\nB,0\n");
        auto attrs = parse_attribute_file(ok);
        CHECK(attrs.at("A") == 5);
        CHECK(attrs.at("B") == 0);
        std::istringstream neg("node,patent_count\nA,-5\n");
        CHECK_THROWS_AS(parse_attribute_file(neg), ParseError);
        std::istringstream dup("node,patent_count\nA,1\nA,2\n");
        CHECK_THROWS_AS(parse_attribute_file(dup), ParseError);
        std::istringstream frac("node,patent_count\nA,1.5\n");
        CHECK_THROWS_AS(parse_attribute_file(frac), ParseError);
    }

    TEST_CASE("missing files are reported with their path") {
        CHECK_THROWS_WITH(load_event_file("/nonexistent/x.csv", LayerKind::opposition),
                          doctest::Contains("/nonexistent/x.csv"));
        CHECK_THROWS_WITH(load_attribute_file("/nonexistent/a.csv"), doctest::Contains("/nonexistent/a.csv"));
    }

    TEST_CASE("layer invariants") {
        auto table = std::make_shared<const NodeTable>(std::vector<std::string>{"A", "B"});
        CHECK_THROWS_AS(TemporalLayer(LayerKind::opposition, table, {{0, 0, 1}}), NetworkError);
        CHECK_THROWS_AS(TemporalLayer(LayerKind::opposition, table, {{0, 2, 1}}), NetworkError);
        TemporalLayer empty(LayerKind::opposition);
        CHECK(empty.event_count() == 0);
        CHECK_FALSE(empty.time_span().has_value());
    }

    TEST_CASE("network node set is the union of layers and attributes") {
        auto o = fixture::opp({{"A", "B", 1}});
        auto c = fixture::col({{"B", "C", 2}});
        auto net = TwoLayerNetwork::build(o, c, AttributeMap{{"D", 5}});
        REQUIRE(net.node_count() == 4);
        CHECK(net.node_table()->name(3) == "D");
        CHECK(net.attribute(3) == std::uint64_t{5});
        CHECK_FALSE(net.attribute(0).has_value());
        CHECK(net.has_attributes());
        CHECK(same_events(net.opposition(), o));
        CHECK(same_events(net.collaboration(), c));
        CHECK_THROWS_AS(TwoLayerNetwork::build(c, o), NetworkError);
    }

    TEST_CASE("empty layers build a valid network") {
        auto o = fixture::opp({{"A", "B", 1}});
        auto net = TwoLayerNetwork::build(o, TemporalLayer(LayerKind::collaboration));
        CHECK(net.collaboration().event_count() == 0);
        CHECK_FALSE(net.has_attributes());
        CHECK_THROWS_WITH(net.require_attributes("attr-static"), doctest::Contains("attr-static"));

        auto none = TwoLayerNetwork::build(TemporalLayer(LayerKind::opposition), TemporalLayer(LayerKind::collaboration));
        CHECK(none.node_count() == 0);
        auto s = layer_summary(none);
        CHECK(s.opposition.events == 0);
        CHECK_FALSE(s.opposition.span.has_value());
    }

    TEST_CASE("summary of the introductory example") {
        auto s = layer_summary(fixture::toy_network());
        CHECK(s.nodes == 3);
        CHECK(s.opposition.nodes == 3);
        CHECK(s.opposition.edges == 3);
        CHECK(s.opposition.events == 3);
        CHECK(s.collaboration.edges == 1);
        CHECK(s.collaboration.events == 1);
        CHECK(s.opposition.span == std::pair<Day, Day>{fixture::kT1, fixture::kT3});
    }

    TEST_CASE("multi-event edge summary") {
        auto s = summarize_layer(fixture::opp({{"A", "B", 1}, {"A", "B", 2}}));
        CHECK(s.edges == 1);
        CHECK(s.events == 2);
    }

    TEST_CASE("property: round trip, edge index and normalization") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            auto kind = trial % 2 ? LayerKind::collaboration : LayerKind::opposition;
            auto layer = gen::random_layer(rng, {}, kind);

            std::size_t timeline_total = 0;
            for (const auto& e : layer.edges()) {
                timeline_total += e.times.size();
                CHECK(std::is_sorted(e.times.begin(), e.times.end()));
            }
            CHECK(timeline_total == layer.event_count());
            CHECK(std::is_sorted(layer.events().begin(), layer.events().end(), chronological_less));
            if (kind == LayerKind::collaboration) {
                for (const auto& e : layer.events()) CHECK(layer.node_name(e.source) < layer.node_name(e.target));
            }

            std::stringstream buf;
            write_event_file(buf, layer);
            auto again = parse_event_file(buf, kind);
            CHECK(same_events(layer, again));
        }
    }
}
