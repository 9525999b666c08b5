#pragma once

#include <string>

#include "ulrich/dual_graph.hpp"

namespace ulrich {

/// Parses the graph file format:
///   {"vertices":[{"id":"E1","self":-2},...],
///    "edges":[{"a":"E1","b":"E2","mult":1},...]}
/// "mult" is optional and defaults to 1. Throws validation_error on malformed
/// input (including JSON syntax errors).
DualGraph parse_graph_json(const std::string& text);

/// Serializes a graph back to the file format (canonical field order).
std::string render_graph_json(const DualGraph& g);

/// Parses a cycle given as "E1=2,E2=1"; unlisted vertices get coefficient 0.
/// Throws validation_error for unknown ids, repeats or negative coefficients.
Cycle parse_cycle_spec(const DualGraph& g, const std::string& spec);

} // namespace ulrich
