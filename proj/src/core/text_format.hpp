#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypergraph.hpp"

namespace tgame {

// Plain-text hypergraph files: a header line `n m`, then m lines of 0-based
// vertex ids, one edge per line. Lines whose first non-blank character is
// `#` are comments; blank lines are skipped.
struct ParsedHypergraph {
  Hypergraph graph;
  std::vector<std::string> warnings;
};

// Throws ParseError (with the 1-based line) for malformed text and
// IndexOutOfRange for vertex ids outside [0, n).
ParsedHypergraph parse_hypergraph(std::string_view text);

// Several instances back to back, each with its own header.
std::vector<ParsedHypergraph> parse_hypergraph_stream(std::string_view text);

// Canonical text: header, then each edge ascending, single spaces, `\n`
// line ends. parse(emit(h)) == h, and emit(parse(t)) == t for canonical t.
std::string emit_hypergraph(const Hypergraph& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace tgame
