#include "tmotif/table.hpp"

#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace tmotif {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string csv_field(const Cell& cell) {
    return std::visit(overloaded{[](std::monostate) { return std::string(); },
                                 [](std::int64_t v) { return fmt::format("{}", v); },
                                 [](std::uint64_t v) { return fmt::format("{}", v); },
                                 [](double v) { return fmt::format("{}", v); },
                                 [](const std::string& v) { return v; }},
                      cell);
}

nlohmann::ordered_json json_value(const Cell& cell) {
    return std::visit(overloaded{[](std::monostate) { return nlohmann::ordered_json(nullptr); },
                                 [](std::int64_t v) { return nlohmann::ordered_json(v); },
                                 [](std::uint64_t v) { return nlohmann::ordered_json(v); },
                                 [](double v) { return nlohmann::ordered_json(v); },
                                 [](const std::string& v) { return nlohmann::ordered_json(v); }},
                      cell);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != header_.size()) {
        throw std::logic_error(fmt::format("row has {} cells, header has {}", row.size(), header_.size()));
    }
    rows_.push_back(std::move(row));
}

void Table::write_csv(std::ostream& out) const {
    out << fmt::format("{}\n", fmt::join(header_, ","));
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_field(row[i]);
        }
        out << '\n';
    }
}

void Table::write_json(std::ostream& out) const {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[header_[i]] = json_value(row[i]);
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace tmotif
