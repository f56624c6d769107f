#include "berge/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace berge {
namespace {

std::vector<unsigned long long> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<unsigned long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    unsigned long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == line.data() + i) {
      throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      throw ParseError("line " + std::to_string(line_no) + ": unexpected character");
    }
  }
  return out;
}

bool is_skippable(std::string_view line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

struct RawEdgeList {
  std::size_t r = 0;
  std::size_t n = 0;
  std::vector<std::vector<VertexId>> edges;
};

RawEdgeList parse_raw(std::string_view text) {
  RawEdgeList raw;
  bool have_header = false;
  std::size_t expected = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (is_skippable(line)) {
      if (end == text.size()) break;
      continue;
    }
    auto nums = parse_numbers(line, line_no);
    if (!have_header) {
      if (nums.size() != 3) throw ParseError("malformed header: expected \"r n m\"");
      if (nums[0] < 2) throw ParseError("malformed header: uniformity must be at least 2");
      raw.r = nums[0];
      raw.n = nums[1];
      expected = nums[2];
      have_header = true;
    } else {
      if (nums.size() != raw.r) {
        throw ParseError("line " + std::to_string(line_no) + ": wrong arity, expected " +
                         std::to_string(raw.r) + " ids");
      }
      std::vector<VertexId> e;
      for (auto v : nums) {
        if (v >= raw.n) {
          throw ParseError("line " + std::to_string(line_no) + ": vertex id " + std::to_string(v) +
                           " >= n");
        }
        e.push_back(static_cast<VertexId>(v));
      }
      raw.edges.push_back(std::move(e));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError("malformed header: missing");
  if (raw.edges.size() != expected) {
    throw ParseError("header announces " + std::to_string(expected) + " edges, found " +
                     std::to_string(raw.edges.size()));
  }
  return raw;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  RawEdgeList raw = parse_raw(text);
  try {
    return Hypergraph(raw.r, raw.n, std::move(raw.edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph parse_graph(std::string_view text) {
  RawEdgeList raw = parse_raw(text);
  if (raw.r != 2) throw ParseError("expected a graph (r = 2), got r = " + std::to_string(raw.r));
  std::vector<GraphEdge> edges;
  for (const auto& e : raw.edges) edges.emplace_back(e[0], e[1]);
  try {
    return Graph(raw.n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize(const Hypergraph& h) {
  std::ostringstream out;
  out << h.uniformity() << ' ' << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    out << '\n';
  }
  return out.str();
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "2 " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

Hypergraph read_hypergraph_file(const std::string& path) { return parse_hypergraph(slurp(path)); }
Graph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace berge
