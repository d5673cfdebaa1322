#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tmotif/network.hpp"

namespace tmotif {

/// Input file error carrying the 1-based line number it refers to.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

/// Reads an event CSV. Opposition files have header `source,target,date`,
/// collaboration files `node_a,node_b,date`; columns may appear in any order
/// and extra columns are ignored. Blank lines are skipped, fields are trimmed
/// and quoting is not supported.
TemporalLayer parse_event_file(std::istream& in, LayerKind kind);

/// Reads `node,patent_count`.
AttributeMap parse_attribute_file(std::istream& in);

void write_event_file(std::ostream& out, const TemporalLayer& layer);
void write_attribute_file(std::ostream& out, const AttributeMap& attributes);

TemporalLayer load_event_file(const std::string& path, LayerKind kind);
AttributeMap load_attribute_file(const std::string& path);

}  // namespace tmotif
