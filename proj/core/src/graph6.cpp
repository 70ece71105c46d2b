#include "raag/graph6.hpp"

#include "raag/error.hpp"

namespace raag {

std::string indexed_vertex_name(std::size_t i, std::size_t n) {
  std::size_t width = 1;
  for (std::size_t top = n > 0 ? n - 1 : 0; top >= 10; top /= 10) ++width;
  auto digits = std::to_string(i);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return digits;
}

SimplicialGraph parse_graph6(std::string_view record, std::size_t line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (record.starts_with(kHeader)) record.remove_prefix(kHeader.size());
  if (record.empty()) throw ParseError(line, "empty graph6 record");

  const auto lead = static_cast<unsigned char>(record.front());
  if (lead == 126) throw CapacityError("graph6 orders above " + std::to_string(kMaxGraph6Order) + " are not supported");
  if (lead < 63 || lead > 125) throw ParseError(line, "invalid graph6 size byte");
  const std::size_t n = lead - 63;

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (record.size() != 1 + bytes) {
    throw ParseError(line, "graph6 record for order " + std::to_string(n) + " needs " + std::to_string(bytes) +
                               " data bytes, got " + std::to_string(record.size() - 1));
  }

  std::vector<VertexId> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(indexed_vertex_name(i, n));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned char>(record[1 + k / 6]);
      if (byte < 63 || byte > 126) throw ParseError(line, "invalid graph6 data byte");
      if (((byte - 63) >> (5 - k % 6)) & 1) edges.emplace_back(vertices[i], vertices[j]);
    }
  }
  return SimplicialGraph::from_edges(std::move(vertices), edges);
}

std::vector<SimplicialGraph> parse_graph6_stream(std::istream& in) {
  std::vector<SimplicialGraph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    out.push_back(parse_graph6(line, line_no));
  }
  return out;
}

std::string to_graph6(const SimplicialGraph& g) {
  const auto n = g.order();
  if (n > kMaxGraph6Order) throw CapacityError("graph6 output is limited to 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace raag
