#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "robspan/geometry.hpp"

namespace robspan {

// Text graph format:
//   dim <d> n <n> m <m>
//   <n lines of d coordinates>
//   <m lines "u v", 0-based>
// Coordinates are written in shortest round-trip decimal form, so a
// write/read cycle reproduces them bit-exactly. One-dimensional files must
// list coordinates in strictly increasing order (index = rank).

GeomGraph read_graph(std::istream& in);
GeomGraph read_graph(const std::filesystem::path& path);
void write_graph(std::ostream& out, const GeomGraph& g);
void write_graph(const std::filesystem::path& path, const GeomGraph& g);

// Vertex-set file: one index per line.
VertexSet read_vertex_set(std::istream& in);
VertexSet read_vertex_set(const std::filesystem::path& path);
void write_vertex_set(std::ostream& out, const VertexSet& s);
void write_vertex_set(const std::filesystem::path& path, const VertexSet& s);

/// Shortest decimal text that parses back to exactly x.
std::string format_real(double x);

}  // namespace robspan
