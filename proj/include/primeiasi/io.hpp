#pragma once

#include <iosfwd>
#include <string>

#include "primeiasi/graph.hpp"
#include "primeiasi/labeling.hpp"

namespace primeiasi {

// Edge list: one "u v" per line, '#' starts a comment, optional first line
// "p <n> <m>" fixing the vertex count and asserting the edge count. Without
// a header the vertex count is max id + 1.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Labeling: header "iasi-labeling 1", then "<vertex> <first> <diff> <len>"
// per vertex in ascending vertex order.
Labeling read_labeling(std::istream& in);
void write_labeling(std::ostream& out, const Labeling& labeling);

Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);
Labeling load_labeling(const std::string& path);
void save_labeling(const std::string& path, const Labeling& labeling);

}  // namespace primeiasi
