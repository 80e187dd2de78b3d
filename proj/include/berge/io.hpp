#pragma once

#include <berge/bounds.hpp>
#include <berge/constructions.hpp>
#include <berge/containment.hpp>
#include <berge/hypergraph.hpp>
#include <berge/search.hpp>
#include <berge/verify.hpp>

#include <string>
#include <string_view>

namespace berge {

// Every *_from_json throws MalformedInput on shape errors; parse_* also
// report the byte offset of JSON syntax errors. Hypergraph validation errors
// (DuplicateEdge, WrongEdgeSize, VertexOutOfRange) pass through unchanged.

Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

/// Compact, byte-stable text: {"n":..,"r":..,"edges":[[..],..]}.
std::string serialize(const Hypergraph& h);
Hypergraph parse_hypergraph(std::string_view text);

Json to_json(const BergeWitness& w);
BergeWitness witness_from_json(const Json& j);

/// Integral rationals become JSON integers, the rest "p/q" strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const BoundResult& b);
BoundResult bound_from_json(const Json& j);

Json to_json(const ConstructionReport& c);
ConstructionReport construction_from_json(const Json& j);

/// Wall time is written only when `include_timing` is set, so identical
/// searches print identical documents.
Json to_json(const SearchOutcome& s, bool include_timing = false);
SearchOutcome outcome_from_json(const Json& j);

Json to_json(const ReportRow& row);
ReportRow report_row_from_json(const Json& j);

/// One JSON object per line.
std::string to_json_lines(const SuiteReport& report);

Json parse_json(std::string_view text);

/// Whole file as text. Both throw IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace berge
