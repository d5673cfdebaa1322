#include "tmotif/event_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <fmt/format.h>

namespace tmotif {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

/// Reads CSV rows after locating the required header columns.
class CsvReader {
public:
    CsvReader(std::istream& in, std::span<const std::string_view> required) : in_(in) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (trim(line).empty()) continue;
            const auto header = split_fields(line);
            for (auto name : required) {
                auto it = std::find(header.begin(), header.end(), name);
                if (it == header.end()) {
                    throw ParseError(line_no_, fmt::format("missing column '{}' in header", name));
                }
                columns_.push_back(static_cast<std::size_t>(it - header.begin()));
            }
            width_ = header.size();
            return;
        }
        throw ParseError(line_no_, "missing header row");
    }

    /// Fills `out` with the required columns of the next row; false at end of input.
    bool next(std::vector<std::string_view>& out) {
        while (std::getline(in_, line_)) {
            ++line_no_;
            if (trim(line_).empty()) continue;
            const auto fields = split_fields(line_);
            if (fields.size() != width_) {
                throw ParseError(line_no_, fmt::format("expected {} columns, found {}", width_, fields.size()));
            }
            out.clear();
            for (auto c : columns_) {
                if (fields[c].empty()) throw ParseError(line_no_, "empty field");
                out.push_back(fields[c]);
            }
            return true;
        }
        return false;
    }

    std::size_t line() const { return line_no_; }

private:
    std::istream& in_;
    std::string line_;
    std::size_t line_no_ = 0;
    std::size_t width_ = 0;
    std::vector<std::size_t> columns_;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path));
    return in;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(fmt::format("line {}: {}", line, message)), line_(line), detail_(message) {}

TemporalLayer parse_event_file(std::istream& in, LayerKind kind) {
    static constexpr std::array<std::string_view, 3> directed_cols{"source", "target", "date"};
    static constexpr std::array<std::string_view, 3> undirected_cols{"node_a", "node_b", "date"};
    CsvReader reader(in, kind == LayerKind::opposition ? directed_cols : undirected_cols);

    struct RawEvent {
        std::string a;
        std::string b;
        Day t;
    };
    std::vector<RawEvent> raw;
    std::vector<std::string_view> row;
    while (reader.next(row)) {
        if (row[0] == row[1]) {
            throw ParseError(reader.line(), fmt::format("self-loop on node '{}'", row[0]));
        }
        Day t = 0;
        try {
            t = parse_iso_date(row[2]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(reader.line(), e.what());
        }
        raw.push_back(RawEvent{std::string(row[0]), std::string(row[1]), t});
    }

    std::vector<std::string> names;
    names.reserve(raw.size() * 2);
    for (const auto& r : raw) {
        names.push_back(r.a);
        names.push_back(r.b);
    }
    auto table = std::make_shared<const NodeTable>(std::move(names));
    std::vector<Event> events;
    events.reserve(raw.size());
    for (const auto& r : raw) events.push_back(Event{*table->find(r.a), *table->find(r.b), r.t});
    return TemporalLayer(kind, std::move(table), std::move(events));
}

AttributeMap parse_attribute_file(std::istream& in) {
    static constexpr std::array<std::string_view, 2> cols{"node", "patent_count"};
    CsvReader reader(in, cols);
    AttributeMap attrs;
    std::vector<std::string_view> row;
    while (reader.next(row)) {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(row[1].data(), row[1].data() + row[1].size(), value);
        if (ec != std::errc{} || ptr != row[1].data() + row[1].size()) {
            throw ParseError(reader.line(), fmt::format("patent_count '{}' is not a non-negative integer", row[1]));
        }
        if (!attrs.emplace(std::string(row[0]), value).second) {
            throw ParseError(reader.line(), fmt::format("duplicate node '{}'", row[0]));
        }
    }
    return attrs;
}

void write_event_file(std::ostream& out, const TemporalLayer& layer) {
    out << (layer.directed() ? "source,target,date\n" : "node_a,node_b,date\n");
    for (const auto& e : layer.events()) {
        out << layer.node_name(e.source) << ',' << layer.node_name(e.target) << ',' << format_iso_date(e.t)
            << '\n';
    }
}

void write_attribute_file(std::ostream& out, const AttributeMap& attributes) {
    out << "node,patent_count\n";
    for (const auto& [node, count] : attributes) out << node << ',' << count << '\n';
}

TemporalLayer load_event_file(const std::string& path, LayerKind kind) {
    auto in = open_input(path);
    try {
        return parse_event_file(in, kind);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), fmt::format("{} ({})", e.detail(), path));
    }
}

AttributeMap load_attribute_file(const std::string& path) {
    auto in = open_input(path);
    try {
        return parse_attribute_file(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), fmt::format("{} ({})", e.detail(), path));
    }
}

}  // namespace tmotif
