#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tmotif/attribute_stats.hpp"
#include "tmotif/dates.hpp"
#include "tmotif/event_io.hpp"
#include "tmotif/motif_engine.hpp"
#include "tmotif/null_models.hpp"
#include "tmotif/overlay.hpp"
#include "tmotif/significance.hpp"
#include "tmotif/static_motif.hpp"
#include "tmotif/synth.hpp"
#include "tmotif/table.hpp"

namespace tmotif::cli {

namespace {

/// Bad flag values that CLI11 cannot check on its own (durations, lists).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string opposition;
    std::string collab;
    std::string attrs;
    std::string dc;
    std::string dw;
    std::string bins = "1y,2y,3y,4y,5y,6y,7y,8y,9y,10y";
    std::string bin_mode = "gap";
    std::string pad = "10y";
    std::string model = "wts";
    std::size_t samples = 10;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string clip = "on";
    int events = 2;
    std::string table;
    std::string deviation = "population";
    std::string rank;
    std::size_t top = 3;
    std::uint64_t swaps = 10;

    std::uint64_t nodes = 1000;
    std::uint64_t ops = 3000;
    std::uint64_t collabs = 300;
    std::string span = "37y";
    double activity_exp = 2.5;
    double burst_prob = 0.2;
    double attr_exp = 1.8;
};

std::optional<Day> duration_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_duration(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(fmt::format("--{}: {}", flag, e.what()));
    }
}

Day finite_duration_flag(const std::string& flag, const std::string& text) {
    auto d = duration_flag(flag, text);
    if (!d) throw UsageError(fmt::format("--{}: must be a finite duration", flag));
    return *d;
}

/// --dc / --dw with a default used when the flag is absent.
Thresholds thresholds(const Options& o, std::string_view fallback) {
    auto dc = duration_flag("dc", o.dc.empty() ? std::string(fallback) : o.dc);
    auto dw = duration_flag("dw", o.dw.empty() ? std::string(fallback) : o.dw);
    try {
        return Thresholds(dc, dw);
    } catch (const MotifError& e) {
        throw UsageError(e.what());
    }
}

std::vector<Day> bin_list(const std::string& text) {
    std::vector<Day> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(finite_duration_flag("bins", item));
    if (out.empty()) throw UsageError("--bins: empty list");
    return out;
}

MotifSize motif_size(const Options& o) { return o.events == 3 ? MotifSize::triple : MotifSize::pair; }

TwoLayerNetwork load_network(const Options& o, bool need_opposition, bool need_collab, bool need_attrs) {
    if (need_opposition && o.opposition.empty()) throw UsageError("--opposition is required");
    if (need_collab && o.collab.empty()) throw UsageError("--collab is required");
    if (need_attrs && o.attrs.empty()) throw UsageError("--attrs is required");

    auto opp = o.opposition.empty() ? TemporalLayer(LayerKind::opposition)
                                    : load_event_file(o.opposition, LayerKind::opposition);
    auto col = o.collab.empty() ? TemporalLayer(LayerKind::collaboration)
                                : load_event_file(o.collab, LayerKind::collaboration);
    std::optional<AttributeMap> attrs;
    if (!o.attrs.empty()) attrs = load_attribute_file(o.attrs);
    return TwoLayerNetwork::build(opp, col, std::move(attrs));
}

Cell date_cell(const std::optional<std::pair<Day, Day>>& span, bool last) {
    if (!span) return {};
    return format_iso_date(last ? span->second : span->first);
}

Cell optional_double(const std::optional<double>& v) { return optional_cell(v); }

Table summary_table(const Options& o) {
    auto net = load_network(o, false, false, false);
    if (o.opposition.empty() && o.collab.empty() && o.attrs.empty()) {
        throw UsageError("summary needs at least one of --opposition, --collab, --attrs");
    }
    auto s = layer_summary(net);
    Table t({"layer", "nodes", "edges", "events", "first_date", "last_date"});
    t.add_row({std::string("network"), std::uint64_t{s.nodes}, Cell{}, Cell{}, Cell{}, Cell{}});
    for (auto [name, ls] : {std::pair{"opposition", s.opposition}, std::pair{"collaboration", s.collaboration}}) {
        t.add_row({std::string(name), std::uint64_t{ls.nodes}, std::uint64_t{ls.edges}, std::uint64_t{ls.events},
                   date_cell(ls.span, false), date_cell(ls.span, true)});
    }
    return t;
}

Table census_table(const Options& o, MotifSize size) {
    auto net = load_network(o, true, false, false);
    auto result = census(net.opposition(), size, thresholds(o, "inf"), o.threads);
    Table t({"class", "count"});
    for (std::size_t i = 0; i < result.counts.size(); ++i) t.add_row({result.label(i), result.counts[i]});
    return t;
}

Table census_bins_table(const Options& o) {
    auto net = load_network(o, true, false, false);
    auto boundaries = bin_list(o.bins);
    auto mode = o.bin_mode == "window" ? BinMode::window : BinMode::gap;
    auto bins = binned_census(net.opposition(), motif_size(o), boundaries, mode, o.threads);
    Table t({"bin_lower_days", "bin_upper_days", "class", "count"});
    for (const auto& bin : bins) {
        for (std::size_t i = 0; i < bin.counts.size(); ++i) {
            t.add_row({std::int64_t{bin.bin->first}, std::int64_t{bin.bin->second}, bin.label(i), bin.counts[i]});
        }
    }
    return t;
}

Table static_census_table(const Options& o) {
    auto net = load_network(o, true, false, false);
    auto counts = static_census(static_projection(net.opposition()));
    Table t({"pattern", "count"});
    for (auto p : kStaticPatterns) t.add_row({std::string(static_pattern_name(p)), counts.count(p)});
    return t;
}

NullModel model_flag(const Options& o) {
    try {
        return parse_null_model(o.model);
    } catch (const std::invalid_argument& e) {
        throw UsageError(fmt::format("--model: {}", e.what()));
    }
}

Table null_sample_table(const Options& o) {
    auto net = load_network(o, true, false, false);
    ShuffleOptions so;
    so.swaps_per_edge = o.swaps;
    auto shuffled = shuffle(net.opposition(), model_flag(o), o.seed, so);
    Table t({"source", "target", "date"});
    for (const auto& e : shuffled.events()) {
        t.add_row({shuffled.node_name(e.source), shuffled.node_name(e.target), format_iso_date(e.t)});
    }
    return t;
}

Table zscore_table(const Options& o) {
    auto net = load_network(o, true, false, false);
    ZScoreOptions zo;
    zo.samples = o.samples;
    zo.seed = o.seed;
    zo.deviation = o.deviation == "sample" ? Deviation::sample : Deviation::population;
    zo.threads = o.threads;
    zo.shuffle.swaps_per_edge = o.swaps;
    auto report = z_scores(net.opposition(), motif_size(o), thresholds(o, "10y"), model_flag(o), zo);

    if (!o.rank.empty()) {
        auto dir = o.rank == "least" ? RankDirection::least : RankDirection::most;
        auto ranking = rank_classes(report, dir, o.top);
        Table t({"rank", "class", "z"});
        for (std::size_t i = 0; i < ranking.ranked.size(); ++i) {
            const auto& label = ranking.ranked[i];
            auto row = std::find_if(report.rows.begin(), report.rows.end(),
                                    [&](const ZRow& r) { return r.label == label; });
            t.add_row({std::uint64_t{i + 1}, label, optional_double(row->z)});
        }
        for (const auto& label : ranking.undefined) t.add_row({Cell{}, label, Cell{}});
        return t;
    }

    Table t({"class", "original", "mu", "sigma", "z"});
    for (const auto& r : report.rows) t.add_row({r.label, r.original, r.mu, r.sigma, optional_double(r.z)});
    return t;
}

Table overlay_table(const Options& o) {
    auto net = load_network(o, true, true, false);
    auto size = motif_size(o);
    auto th = thresholds(o, "10y");
    Day pad = finite_duration_flag("pad", o.pad);
    std::string kind = o.table.empty() ? "count" : o.table;

    if (kind == "records") {
        Table t({"instance", "class", "first_date", "last_date", "node_a", "node_b", "collab_date", "pair",
                 "timing"});
        std::uint64_t instance = 0;
        for_each_overlay(net, size, th, pad, [&](const OverlayInstance& inst) {
            for (const auto& r : inst.records) {
                Cell timing;
                if (r.timing) timing = std::string(timing_name(*r.timing));
                t.add_row({instance, inst.motif.class_label(), format_iso_date(inst.motif.first_time()),
                           format_iso_date(inst.motif.last_time()), net.node_table()->name(r.collab.source),
                           net.node_table()->name(r.collab.target), format_iso_date(r.collab.t),
                           role_pair_label(size, inst.motif.class_index, r.pair_index), timing});
            }
            ++instance;
        });
        return t;
    }

    OverlayTally tally(size, pad, net.collaboration().time_span(),
                       o.clip == "off" ? IntervalClip::unclipped : IntervalClip::clipped);
    for_each_overlay(net, size, th, pad, [&](const OverlayInstance& inst) { tally.add(inst); });

    if (kind == "count") {
        Table t({"class", "instances", "frac_0", "frac_1", "frac_2", "frac_3plus"});
        for (const auto& r : tally.count_distribution()) {
            std::vector<Cell> row{r.motif, r.instances};
            for (int i = 0; i < 4; ++i) row.push_back(r.fractions ? Cell{(*r.fractions)[i]} : Cell{});
            t.add_row(std::move(row));
        }
        return t;
    }
    if (kind == "pairs") {
        Table t({"class", "collaborations", "pair_1", "fraction_1", "pair_2", "fraction_2", "pair_3", "fraction_3"});
        for (const auto& r : tally.pair_fractions()) {
            std::vector<Cell> row{r.motif, r.collaborations};
            for (int i = 0; i < 3; ++i) {
                row.push_back(r.pairs[i]);
                row.push_back(r.fractions ? Cell{(*r.fractions)[i]} : Cell{});
            }
            t.add_row(std::move(row));
        }
        return t;
    }
    if (kind == "timing") {
        Table t({"class", "pair", "records", "before", "between", "after"});
        for (const auto& r : tally.timing_fractions()) {
            std::vector<Cell> row{r.motif, r.pair, r.records};
            for (int i = 0; i < 3; ++i) row.push_back(r.fractions ? Cell{(*r.fractions)[i]} : Cell{});
            t.add_row(std::move(row));
        }
        return t;
    }
    // per-year
    Table t({"class", "pair", "before_per_year", "between_per_year", "after_per_year", "before_years",
             "between_years", "after_years"});
    for (const auto& r : tally.timing_per_year()) {
        std::vector<Cell> row{r.motif, r.pair};
        for (const auto& v : r.per_year) row.push_back(optional_double(v));
        for (const auto& v : r.mean_length_years) row.push_back(optional_double(v));
        t.add_row(std::move(row));
    }
    return t;
}

Table position_table(const std::vector<PositionStats>& stats) {
    Table t({"class", "position", "count", "mean", "median", "std"});
    for (const auto& s : stats) {
        t.add_row({s.motif, s.position, std::uint64_t{s.stats.count}, optional_double(s.stats.mean),
                   optional_double(s.stats.median), optional_double(s.stats.std)});
    }
    return t;
}

Table attr_temporal_table(const Options& o) {
    auto net = load_network(o, true, false, true);
    return position_table(position_stats_temporal(net, thresholds(o, "10y")));
}

Table attr_static_table(const Options& o) {
    auto net = load_network(o, true, false, true);
    return position_table(position_stats_static(net));
}

Table attr_dist_table(const Options& o) {
    auto net = load_network(o, false, false, true);
    auto dist = attribute_distribution(net);
    if (o.table == "summary") {
        Table t({"count", "mean", "median", "std", "min", "max"});
        const auto& s = dist.summary;
        t.add_row({std::uint64_t{s.count}, optional_double(s.mean), optional_double(s.median), optional_double(s.std),
                   optional_cell(s.min), optional_cell(s.max)});
        return t;
    }
    Table t({"lower", "upper", "count"});
    for (const auto& b : dist.histogram) t.add_row({b.lower, b.upper, b.count});
    return t;
}

Table synth_command(const Options& o, const std::string& out_dir) {
    SynthConfig cfg;
    cfg.node_count = o.nodes;
    cfg.opposition_events = o.ops;
    cfg.collaboration_events = o.collabs;
    cfg.span_days = finite_duration_flag("span", o.span);
    cfg.activity_exponent = o.activity_exp;
    cfg.burst_prob = o.burst_prob;
    cfg.attr_exponent = o.attr_exp;
    cfg.seed = o.seed;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto data = generate_synthetic(cfg);
    write_synthetic(data, out_dir);

    Options written;
    written.opposition = out_dir + "/opposition.csv";
    written.collab = out_dir + "/collaboration.csv";
    written.attrs = out_dir + "/attributes.csv";
    return summary_table(written);
}

void emit(const Table& table, const Options& o, std::ostream& out) {
    auto write = [&](std::ostream& s) {
        if (o.format == "json")
            table.write_json(s);
        else
            table.write_csv(s);
    };
    if (o.out.empty()) {
        write(out);
        return;
    }
    std::ofstream file(o.out);
    if (!file) throw std::runtime_error(fmt::format("cannot open {} for writing", o.out));
    write(file);
    if (!file) throw std::runtime_error(fmt::format("failed writing {}", o.out));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    std::string out_dir = ".";

    CLI::App app{"Temporal motif analysis of opposition and collaboration networks", "tmotif"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"csv", "json"};
    auto input_flags = [&](CLI::App* cmd) {
        cmd->add_option("--opposition", o.opposition, "Opposition events CSV (source,target,date)");
        cmd->add_option("--collab", o.collab, "Collaboration events CSV (node_a,node_b,date)");
        cmd->add_option("--attrs", o.attrs, "Patent counts CSV (node,patent_count)");
    };
    auto output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
        cmd->add_option("--out", o.out, "Write the table to FILE instead of stdout");
    };
    auto threshold_flags = [&](CLI::App* cmd) {
        cmd->add_option("--dc", o.dc, "Max gap between consecutive node-sharing events (e.g. 10y, 18m, 100d, inf)");
        cmd->add_option("--dw", o.dw, "Max span of the whole motif");
    };
    auto threads_flag = [&](CLI::App* cmd) {
        cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    };
    auto events_flag = [&](CLI::App* cmd) {
        cmd->add_option("--events", o.events, "Events per motif (2 or 3)")->check(CLI::IsMember({2, 3}));
    };
    auto seed_flag = [&](CLI::App* cmd) { cmd->add_option("--seed", o.seed, "Random seed")->required(); };

    auto* summary = app.add_subcommand("summary", "Node, edge and event counts per layer");
    input_flags(summary);
    output_flags(summary);

    auto* census2 = app.add_subcommand("census2", "Counts of 2-event motifs per class");
    auto* census3 = app.add_subcommand("census3", "Counts of 3-event motifs per class");
    for (auto* cmd : {census2, census3}) {
        input_flags(cmd);
        threshold_flags(cmd);
        threads_flag(cmd);
        output_flags(cmd);
    }

    auto* bins = app.add_subcommand("census-bins", "Motif counts binned by inter-event gap or window");
    input_flags(bins);
    events_flag(bins);
    bins->add_option("--bins", o.bins, "Comma-separated ascending bin boundaries");
    bins->add_option("--bin-mode", o.bin_mode, "gap or window")->check(CLI::IsMember({"gap", "window"}));
    threads_flag(bins);
    output_flags(bins);

    auto* stat = app.add_subcommand("static-census", "Two-edge static pattern counts");
    input_flags(stat);
    output_flags(stat);

    auto* null_sample = app.add_subcommand("null-sample", "One randomized opposition layer");
    input_flags(null_sample);
    null_sample->add_option("--model", o.model, "ls, dcls, wts, is or ts");
    seed_flag(null_sample);
    null_sample->add_option("--swaps", o.swaps, "DCLS swaps per edge");
    output_flags(null_sample);

    auto* zscore = app.add_subcommand("zscore", "Z scores of motif counts against a null model");
    input_flags(zscore);
    events_flag(zscore);
    threshold_flags(zscore);
    zscore->add_option("--model", o.model, "ls, dcls, wts, is or ts");
    zscore->add_option("--samples", o.samples, "Randomized samples");
    seed_flag(zscore);
    zscore->add_option("--swaps", o.swaps, "DCLS swaps per edge");
    zscore->add_option("--deviation", o.deviation, "population or sample")
        ->check(CLI::IsMember({"population", "sample"}));
    zscore->add_option("--rank", o.rank, "Print the top (most) or bottom (least) classes instead")
        ->check(CLI::IsMember({"most", "least"}));
    zscore->add_option("--top", o.top, "Classes listed by --rank");
    threads_flag(zscore);
    output_flags(zscore);

    auto* overlay = app.add_subcommand("overlay", "Collaborations attached to opposition motifs");
    input_flags(overlay);
    events_flag(overlay);
    threshold_flags(overlay);
    overlay->add_option("--pad", o.pad, "Collaboration search padding around each motif");
    overlay->add_option("--table", o.table, "count, pairs, timing, per-year or records")
        ->check(CLI::IsMember({"count", "pairs", "timing", "per-year", "records"}));
    overlay->add_option("--clip-intervals", o.clip, "Clip before/after intervals to the collaboration span")
        ->check(CLI::IsMember({"on", "off"}));
    output_flags(overlay);

    auto* attr_temporal = app.add_subcommand("attr-temporal", "Patent counts by 2-event motif position");
    input_flags(attr_temporal);
    threshold_flags(attr_temporal);
    output_flags(attr_temporal);

    auto* attr_static = app.add_subcommand("attr-static", "Patent counts by static pattern position");
    input_flags(attr_static);
    output_flags(attr_static);

    auto* attr_dist = app.add_subcommand("attr-dist", "Distribution of patent counts");
    input_flags(attr_dist);
    attr_dist->add_option("--table", o.table, "histogram or summary")
        ->check(CLI::IsMember({"histogram", "summary"}));
    output_flags(attr_dist);

    auto* synth = app.add_subcommand("synth", "Generate a synthetic two-layer dataset");
    synth->add_option("--nodes", o.nodes, "Companies");
    synth->add_option("--ops", o.ops, "Opposition events");
    synth->add_option("--collabs", o.collabs, "Collaboration events");
    synth->add_option("--span", o.span, "Observation window length");
    synth->add_option("--activity-exp", o.activity_exp, "Power-law exponent of node activity");
    synth->add_option("--burst-prob", o.burst_prob, "Probability an opposition follows a recent one");
    synth->add_option("--attr-exp", o.attr_exp, "Power-law exponent of patent counts");
    seed_flag(synth);
    synth->add_option("--out-dir", out_dir, "Directory for the generated CSV files");
    output_flags(synth);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        Table table({});
        if (summary->parsed())
            table = summary_table(o);
        else if (census2->parsed())
            table = census_table(o, MotifSize::pair);
        else if (census3->parsed())
            table = census_table(o, MotifSize::triple);
        else if (bins->parsed())
            table = census_bins_table(o);
        else if (stat->parsed())
            table = static_census_table(o);
        else if (null_sample->parsed())
            table = null_sample_table(o);
        else if (zscore->parsed())
            table = zscore_table(o);
        else if (overlay->parsed())
            table = overlay_table(o);
        else if (attr_temporal->parsed())
            table = attr_temporal_table(o);
        else if (attr_static->parsed())
            table = attr_static_table(o);
        else if (attr_dist->parsed())
            table = attr_dist_table(o);
        else
            table = synth_command(o, out_dir);
        emit(table, o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace tmotif::cli
