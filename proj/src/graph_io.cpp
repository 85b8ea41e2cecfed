#include "robspan/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "robspan/error.hpp"

namespace robspan {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line_no, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw InputError("format_real: conversion failed");
  return std::string(buf, ptr);
}

GeomGraph read_graph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "missing header 'dim <d> n <n> m <m>'");
  const auto header = split_ws(line);
  if (header.size() != 6 || header[0] != "dim" || header[2] != "n" || header[4] != "m") {
    throw ParseError(reader.line_no(), "malformed header, expected 'dim <d> n <n> m <m>'");
  }
  const auto dim = parse_number<std::size_t>(header[1], reader.line_no(), "dimension");
  const auto n = parse_number<std::size_t>(header[3], reader.line_no(), "vertex count");
  const auto m = parse_number<std::size_t>(header[5], reader.line_no(), "edge count");
  if (dim == 0) throw ParseError(reader.line_no(), "dimension must be positive");

  std::vector<double> coords;
  coords.reserve(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    if (!reader.next(line)) throw ParseError(reader.line_no() + 1, "expected coordinate row " + std::to_string(i));
    const auto tokens = split_ws(line);
    if (tokens.size() != dim) {
      throw ParseError(reader.line_no(), "expected " + std::to_string(dim) + " coordinates, got " +
                                             std::to_string(tokens.size()));
    }
    for (auto tok : tokens) coords.push_back(parse_number<double>(tok, reader.line_no(), "coordinate"));
    if (dim == 1 && i > 0 && !(coords[i - 1] < coords[i])) {
      throw ParseError(reader.line_no(), "1-D coordinates must be strictly increasing");
    }
  }

  std::vector<std::pair<Index, Index>> edges;
  edges.reserve(m);
  std::vector<std::size_t> edge_lines;
  for (std::size_t e = 0; e < m; ++e) {
    if (!reader.next(line)) throw ParseError(reader.line_no() + 1, "expected edge row " + std::to_string(e));
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError(reader.line_no(), "expected 'u v'");
    const auto u = parse_number<Index>(tokens[0], reader.line_no(), "vertex index");
    const auto v = parse_number<Index>(tokens[1], reader.line_no(), "vertex index");
    if (u >= n || v >= n) throw ParseError(reader.line_no(), "vertex index out of range");
    if (u == v) throw ParseError(reader.line_no(), "self-loop");
    edges.emplace_back(std::min(u, v), std::max(u, v));
    edge_lines.push_back(reader.line_no());
  }
  if (reader.next(line)) throw ParseError(reader.line_no(), "trailing content after edge list");

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      throw ParseError(std::max(edge_lines[order[i]], edge_lines[order[i - 1]]), "duplicate edge");
    }
  }

  PointsPtr points;
  try {
    points = share(PointSet(dim, std::move(coords)));
  } catch (const InputError& err) {
    throw ParseError(1, err.what());
  }
  return GeomGraph(std::move(points), std::move(edges));
}

GeomGraph read_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const GeomGraph& g) {
  const PointSet& pts = g.points();
  out << "dim " << pts.dim() << " n " << pts.size() << " m " << g.edge_count() << '\n';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto p = pts[i];
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (a) out << ' ';
      out << format_real(p[a]);
    }
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph(const std::filesystem::path& path, const GeomGraph& g) {
  auto out = open_out(path);
  write_graph(out, g);
}

VertexSet read_vertex_set(std::istream& in) {
  LineReader reader(in);
  std::string line;
  std::vector<Index> items;
  while (reader.next(line)) {
    const auto tokens = split_ws(line);
    if (tokens.size() != 1) throw ParseError(reader.line_no(), "expected one index per line");
    items.push_back(parse_number<Index>(tokens[0], reader.line_no(), "vertex index"));
  }
  const std::size_t raw = items.size();
  VertexSet s(std::move(items));
  if (s.size() != raw) throw ParseError(reader.line_no(), "duplicate vertex index");
  return s;
}

VertexSet read_vertex_set(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_vertex_set(in);
}

void write_vertex_set(std::ostream& out, const VertexSet& s) {
  for (Index v : s) out << v << '\n';
}

void write_vertex_set(const std::filesystem::path& path, const VertexSet& s) {
  auto out = open_out(path);
  write_vertex_set(out, s);
}

}  // namespace robspan
