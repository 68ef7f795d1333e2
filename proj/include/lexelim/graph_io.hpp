#pragma once

#include <string>
#include <string_view>

#include "lexelim/graph.hpp"

namespace lexelim {

enum class Dialect { Plain, Dimacs };

/// Parses either dialect; DIMACS is recognized by a leading "c" or "p" line.
///
/// Plain: "n m", then m lines "u v" (0-indexed), then an optional line
/// "weights w0 ... w_{n-1}". Blank lines are ignored.
/// DIMACS: "p edge n m", m lines "e u v" (1-indexed), optional "n v w"
/// weight lines, "c" comments anywhere.
///
/// Missing weights default to 1. Errors throw Parse with the line number.
WeightedGraph parse_graph(std::string_view text);

WeightedGraph read_graph_file(const std::string& path);

/// Weights are written only when some weight differs from 1.
std::string write_graph(const WeightedGraph& wg, Dialect dialect = Dialect::Plain);

}  // namespace lexelim
