#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// Cut vertices (articulation points) by depth-first lowpoint traversal.
VertexSubset cut_vertices(const SimplicialGraph& g);

/// Cut vertices straight from the definition: v such that g - v has more
/// components than g. Quadratic; used for cross-checks and census recounts.
VertexSubset cut_vertices_by_removal(const SimplicialGraph& g);

/// Connected, at least two vertices, no cut vertex. K2 is biconnected; a single
/// vertex is not. Throws EmptyGraphError on the empty graph.
bool is_biconnected(const SimplicialGraph& g);

/// Maximal biconnected induced subgraphs, as vertex sets, ordered by their
/// sorted member lists. Requires g connected with at least two vertices.
std::vector<VertexSubset> bicomponents(const SimplicialGraph& g);

struct BlackNode {
  std::size_t id;
  VertexId cut_vertex;
};

struct WhiteNode {
  std::size_t id;
  VertexSubset block;
};

/// Bipartite tree of cut vertices (black) and blocks (white). Black and white
/// nodes are numbered separately: black ids follow cut-vertex name order,
/// white ids follow bicomponents() order.
struct BlockTree {
  std::vector<BlackNode> black;
  std::vector<WhiteNode> white;
  /// (black id, white id), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t black_valence(std::size_t id) const;
  std::size_t white_valence(std::size_t id) const;
};

BlockTree block_tree(const SimplicialGraph& g);

}  // namespace raag
