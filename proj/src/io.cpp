#include "primeiasi/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "primeiasi/error.hpp"

namespace primeiasi {

namespace {

// Splits a line into whitespace-separated tokens after dropping comments.
std::vector<std::string_view> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no) {
  std::int64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) fail(line_no, "expected an integer, got '" + std::string(tok) + "'");
  if (value < 0) fail(line_no, "negative value " + std::string(tok));
  return value;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::optional<std::int64_t> header_n;
  std::optional<std::int64_t> header_m;
  std::vector<Edge> edges;
  std::int64_t max_id = -1;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "p") {
      if (seen_content) fail(line_no, "header must precede edges");
      if (tok.size() != 3) fail(line_no, "header must be 'p <n> <m>'");
      header_n = parse_int(tok[1], line_no);
      header_m = parse_int(tok[2], line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tok.size() != 2) fail(line_no, "expected 'u v'");
    const auto u = parse_int(tok[0], line_no);
    const auto v = parse_int(tok[1], line_no);
    if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
    if (u > UINT32_MAX - 1 || v > UINT32_MAX - 1) fail(line_no, "vertex id too large");
    if (header_n && (u >= *header_n || v >= *header_n)) {
      fail(line_no, "vertex id exceeds header count " + std::to_string(*header_n));
    }
    max_id = std::max({max_id, u, v});
    edges.push_back(Edge::make(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  if (header_m && *header_m != static_cast<std::int64_t>(edges.size())) {
    throw ParseError("header declares " + std::to_string(*header_m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  const auto n = static_cast<std::size_t>(header_n ? *header_n : max_id + 1);
  try {
    return Graph(n, std::move(edges));
  } catch (const InvalidParams& e) {
    throw ParseError(e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Labeling read_labeling(std::istream& in) {
  Labeling out;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "iasi-labeling" || tok[1] != "1") {
        fail(line_no, "expected header 'iasi-labeling 1'");
      }
      header = true;
      continue;
    }
    if (tok.size() != 4) fail(line_no, "expected '<vertex> <first> <diff> <len>'");
    const auto v = parse_int(tok[0], line_no);
    if (v > UINT32_MAX - 1) fail(line_no, "vertex id too large");
    APSet ap{parse_int(tok[1], line_no), parse_int(tok[2], line_no), parse_int(tok[3], line_no)};
    if (ap.diff < 1) fail(line_no, "common difference must be positive");
    if (ap.len < 1) fail(line_no, "length must be positive");
    if (!out.assignment.emplace(static_cast<Vertex>(v), ap).second) {
      fail(line_no, "vertex " + std::to_string(v) + " labeled twice");
    }
  }
  if (!header) throw ParseError("missing 'iasi-labeling 1' header");
  return out;
}

void write_labeling(std::ostream& out, const Labeling& labeling) {
  out << "iasi-labeling 1\n";
  for (const auto& [v, ap] : labeling.assignment) {
    out << v << ' ' << ap.first << ' ' << ap.diff << ' ' << ap.len << '\n';
  }
}

Graph load_edge_list(const std::string& path) {
  auto in = open_in(path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
  auto out = open_out(path);
  write_edge_list(out, g);
}

Labeling load_labeling(const std::string& path) {
  auto in = open_in(path);
  return read_labeling(in);
}

void save_labeling(const std::string& path, const Labeling& labeling) {
  auto out = open_out(path);
  write_labeling(out, labeling);
}

}  // namespace primeiasi
