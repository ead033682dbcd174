#include "text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace tgame {

namespace {

struct Line {
  int number;
  std::string_view text;
};

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<long long> integers(const Line& line) {
  std::vector<long long> out;
  std::size_t pos = 0;
  const std::string_view t = line.text;
  while (true) {
    pos = t.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    const std::size_t end = std::min(t.find_first_of(" \t", pos), t.size());
    const std::string_view token = t.substr(pos, end - pos);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(line.number, "expected an integer, found '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

ParsedHypergraph parse_one(const std::vector<Line>& lines, std::size_t& cursor) {
  const Line& header = lines[cursor++];
  const std::vector<long long> nm = integers(header);
  if (nm.size() != 2) throw ParseError(header.number, "header must be 'n m'");
  const long long n = nm[0], m = nm[1];
  if (n < 0 || m < 0) throw ParseError(header.number, "n and m must be non-negative");
  if (n > 1'000'000 || m > 1'000'000) throw ParseError(header.number, "n or m unreasonably large");

  std::vector<std::vector<VertexId>> edges;
  for (long long e = 0; e < m; ++e) {
    if (cursor >= lines.size()) {
      const int last = lines.empty() ? header.number : lines.back().number;
      throw ParseError(last, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(e));
    }
    const Line& line = lines[cursor++];
    std::vector<VertexId> edge;
    for (long long v : integers(line)) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(line.number) + ": vertex " +
                                                    std::to_string(v) + " outside 0.." +
                                                    std::to_string(n - 1));
      }
      edge.push_back(static_cast<VertexId>(v));
    }
    edges.push_back(std::move(edge));
  }

  ParsedHypergraph out{Hypergraph::build(static_cast<int>(n), edges), {}};
  for (EdgeId e = 0; e < out.graph.size(); ++e) {
    const int copies = out.graph.multiplicity()[static_cast<std::size_t>(e)];
    if (copies > 1) {
      out.warnings.push_back("edge " + std::to_string(e) + " appeared " + std::to_string(copies) +
                             " times; duplicates removed");
    }
  }
  return out;
}

}  // namespace

ParsedHypergraph parse_hypergraph(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  std::size_t cursor = 0;
  ParsedHypergraph out = parse_one(lines, cursor);
  if (cursor != lines.size()) {
    throw ParseError(lines[cursor].number, "unexpected line after the last edge");
  }
  return out;
}

std::vector<ParsedHypergraph> parse_hypergraph_stream(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  std::vector<ParsedHypergraph> out;
  std::size_t cursor = 0;
  while (cursor < lines.size()) out.push_back(parse_one(lines, cursor));
  return out;
}

std::string emit_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.order()) + " " + std::to_string(h.size()) + "\n";
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace tgame
