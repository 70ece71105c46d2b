#include "raag/blocks.hpp"

#include <algorithm>
#include <limits>

#include "raag/error.hpp"

namespace raag {

namespace {

constexpr auto kUnvisited = std::numeric_limits<std::size_t>::max();

struct LowpointResult {
  std::vector<bool> is_cut;
  std::vector<std::vector<std::size_t>> blocks;  // vertex indices
};

// Iterative Hopcroft-Tarjan over every component of g.
LowpointResult lowpoint_traversal(const SimplicialGraph& g) {
  const auto n = g.order();
  LowpointResult result;
  result.is_cut.assign(n, false);

  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> edge_stack;

  struct Frame {
    std::size_t vertex;
    std::size_t parent;
    std::size_t next;  // position in the adjacency list
  };
  std::vector<Frame> frames;
  std::size_t clock = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    disc[root] = low[root] = clock++;
    frames.push_back({root, kUnvisited, 0});
    std::size_t root_children = 0;

    while (!frames.empty()) {
      auto& top = frames.back();
      const auto x = top.vertex;
      const auto nbrs = g.neighbors(x);
      if (top.next < nbrs.size()) {
        const auto y = nbrs[top.next++];
        if (y == top.parent) continue;
        if (disc[y] == kUnvisited) {
          edge_stack.emplace_back(x, y);
          disc[y] = low[y] = clock++;
          if (x == root) ++root_children;
          frames.push_back({y, x, 0});
        } else if (disc[y] < disc[x]) {
          edge_stack.emplace_back(x, y);
          low[x] = std::min(low[x], disc[y]);
        }
        continue;
      }

      const auto parent = top.parent;
      frames.pop_back();
      if (parent == kUnvisited) continue;
      low[parent] = std::min(low[parent], low[x]);
      if (low[x] >= disc[parent]) {
        if (parent != root) result.is_cut[parent] = true;
        std::vector<std::size_t> block;
        while (true) {
          const auto [a, b] = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(a);
          block.push_back(b);
          if (a == parent && b == x) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        result.blocks.push_back(std::move(block));
      }
    }
    if (root_children >= 2) result.is_cut[root] = true;
  }
  return result;
}

std::size_t component_count_without(const SimplicialGraph& g, std::size_t removed) {
  std::vector<bool> seen(g.order(), false);
  if (removed < g.order()) seen[removed] = true;
  std::size_t count = 0;
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    ++count;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

void require_block_input(const SimplicialGraph& g) {
  if (g.order() < 2) throw DomainError("block decomposition needs at least two vertices");
  if (!is_connected(g)) throw DomainError("block decomposition needs a connected graph");
}

}  // namespace

VertexSubset cut_vertices(const SimplicialGraph& g) {
  const auto lp = lowpoint_traversal(g);
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (lp.is_cut[i]) out.push_back(g.name(i));
  }
  return VertexSubset(std::move(out));
}

VertexSubset cut_vertices_by_removal(const SimplicialGraph& g) {
  const auto base = component_count_without(g, kUnvisited);
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (component_count_without(g, v) > base) out.push_back(g.name(v));
  }
  return VertexSubset(std::move(out));
}

bool is_biconnected(const SimplicialGraph& g) {
  if (g.empty()) throw EmptyGraphError("biconnectivity is undefined for the empty graph");
  if (g.order() < 2 || !is_connected(g)) return false;
  return cut_vertices(g).empty();
}

std::vector<VertexSubset> bicomponents(const SimplicialGraph& g) {
  require_block_input(g);
  auto lp = lowpoint_traversal(g);
  // Index order is name order, so sorting index lists sorts member lists.
  std::sort(lp.blocks.begin(), lp.blocks.end());
  std::vector<VertexSubset> out;
  out.reserve(lp.blocks.size());
  for (const auto& block : lp.blocks) {
    std::vector<VertexId> names;
    names.reserve(block.size());
    for (auto i : block) names.push_back(g.name(i));
    out.emplace_back(std::move(names));
  }
  return out;
}

std::size_t BlockTree::black_valence(std::size_t id) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [id](const auto& e) { return e.first == id; }));
}

std::size_t BlockTree::white_valence(std::size_t id) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [id](const auto& e) { return e.second == id; }));
}

BlockTree block_tree(const SimplicialGraph& g) {
  BlockTree tree;
  const auto blocks = bicomponents(g);
  for (std::size_t i = 0; i < blocks.size(); ++i) tree.white.push_back({i, blocks[i]});
  const auto cuts = cut_vertices(g);
  std::size_t id = 0;
  for (const auto& v : cuts) tree.black.push_back({id++, v});
  for (const auto& b : tree.black) {
    for (const auto& w : tree.white) {
      if (w.block.contains(b.cut_vertex)) tree.edges.emplace_back(b.id, w.id);
    }
  }
  return tree;
}

}  // namespace raag
