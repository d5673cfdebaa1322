#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tmotif {

/// Empty cells (std::monostate) serialize as an empty CSV field and JSON null.
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string>;

template <typename T>
Cell optional_cell(const std::optional<T>& value) {
    if (value) return Cell{*value};
    return Cell{};
}

/// A header plus rows, written as CSV or as a JSON array of row objects.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<Cell> row);

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }

    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace tmotif
