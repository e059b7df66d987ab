#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "altmatch/graph.hpp"
#include "altmatch/matching.hpp"

namespace altmatch {

/// Input errors carry the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
    int line;
};

/// Edge-list text format: first line "nu m", then m lines "u v" with
/// 0 <= u < v < nu. Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// Matching text format: one "u v" pair per line, validated against the
/// companion graph. Blank lines and '#' comments are ignored.
Matching parse_matching(std::istream& in, const Graph& g);
Matching read_matching_file(const std::string& path, const Graph& g);
void write_matching(std::ostream& out, const Matching& m);

/// Standard ASCII graph6 encoding: the order in 1 or 4 bytes offset by 63,
/// then the upper triangle of the adjacency matrix packed column-major,
/// 6 bits per byte, each byte offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);  // throws std::invalid_argument on malformed input

}  // namespace altmatch
