#include "raag/enumerate.hpp"

#include <string>
#include <vector>

#include "raag/error.hpp"
#include "raag/graph6.hpp"

namespace raag {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxEnumerationOrder) {
    throw CapacityError("labeled enumeration is limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
  }
}

}  // namespace

std::uint64_t labeled_graph_count(std::size_t n) {
  check_order(n);
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

SimplicialGraph labeled_graph(std::size_t n, std::uint64_t mask) {
  check_order(n);
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(indexed_vertex_name(i, n));
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1) edges.emplace_back(vertices[i], vertices[j]);
    }
  }
  return SimplicialGraph::from_edges(std::move(vertices), edges);
}

void for_each_labeled_graph(std::size_t n, const std::function<void(const SimplicialGraph&)>& visit) {
  const auto total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(labeled_graph(n, mask));
}

}  // namespace raag
