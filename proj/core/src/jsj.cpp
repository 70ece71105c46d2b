#include "raag/jsj.hpp"

#include <algorithm>
#include <map>

#include "raag/blocks.hpp"
#include "raag/error.hpp"

namespace raag {

std::string_view to_string(GroupKind kind) noexcept { return kind == GroupKind::raag ? "raag" : "cyclic"; }

std::string_view to_string(NodeColor color) noexcept { return color == NodeColor::black ? "black" : "white"; }

GroupDescriptor GroupDescriptor::raag(VertexSubset s) { return {GroupKind::raag, std::move(s)}; }

GroupDescriptor GroupDescriptor::cyclic(VertexId v) { return {GroupKind::cyclic, VertexSubset{std::move(v)}}; }

const GoGVertex* GraphOfGroups::find_vertex(std::string_view id) const {
  auto it = std::find_if(vertices.begin(), vertices.end(), [id](const GoGVertex& v) { return v.id == id; });
  return it == vertices.end() ? nullptr : &*it;
}

std::size_t GraphOfGroups::valence(std::string_view id) const {
  std::size_t count = 0;
  for (const auto& e : edges) {
    count += static_cast<std::size_t>(e.ends[0] == id) + static_cast<std::size_t>(e.ends[1] == id);
  }
  return count;
}

bool GraphOfGroups::base_connected() const {
  if (vertices.empty()) return false;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : edges) {
    adj[e.ends[0]].push_back(e.ends[1]);
    adj[e.ends[1]].push_back(e.ends[0]);
  }
  std::vector<std::string> stack{vertices.front().id};
  std::map<std::string, bool> seen{{vertices.front().id, true}};
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (const auto& y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return std::all_of(vertices.begin(), vertices.end(), [&](const GoGVertex& v) { return seen[v.id]; });
}

namespace {

void require_jsj_input(const SimplicialGraph& g) {
  if (g.order() < 3) {
    throw JsjPreconditionError("the JSJ decomposition needs a connected graph with at least three vertices (got " +
                               std::to_string(g.order()) + " vertices)");
  }
  if (!is_connected(g)) {
    throw JsjPreconditionError("the JSJ decomposition needs a connected graph with at least three vertices (graph is disconnected)");
  }
}

std::string white_id(std::size_t i) { return "w" + std::to_string(i); }
std::string black_id(std::size_t i) { return "b" + std::to_string(i); }

}  // namespace

GraphOfGroups build_j0(const SimplicialGraph& g) {
  require_jsj_input(g);
  const auto tree = block_tree(g);

  GraphOfGroups gog;
  gog.source_graph = g;
  std::size_t next_edge = 0;
  std::vector<GoGEdge> loops;

  for (const auto& w : tree.white) {
    GoGVertex x;
    x.id = white_id(w.id);
    x.color = NodeColor::white;
    x.block = w.block;
    x.toral = w.block.size() == 2;
    x.hanging = x.toral && tree.white_valence(w.id) == 1;
    if (x.hanging) {
      // The block is an edge v-leaf where only v has valence above one in g.
      const auto& a = w.block.members()[0];
      const auto& b = w.block.members()[1];
      const bool a_is_leaf = g.degree(g.index(a)) == 1;
      const auto& v = a_is_leaf ? b : a;
      const auto& leaf = a_is_leaf ? a : b;
      x.group = GroupDescriptor::cyclic(v);
      loops.push_back(GoGEdge{"", {x.id, x.id}, v, {v, v}, true, leaf});
    } else {
      x.group = GroupDescriptor::raag(w.block);
    }
    gog.vertices.push_back(std::move(x));
  }

  for (const auto& b : tree.black) {
    GoGVertex x;
    x.id = black_id(b.id);
    x.color = NodeColor::black;
    x.block = VertexSubset{b.cut_vertex};
    x.group = GroupDescriptor::cyclic(b.cut_vertex);
    gog.vertices.push_back(std::move(x));
  }

  for (const auto& [bid, wid] : tree.edges) {
    const auto& v = tree.black[bid].cut_vertex;
    gog.edges.push_back(GoGEdge{"e" + std::to_string(next_edge++), {black_id(bid), white_id(wid)}, v, {v, v}, false,
                                std::nullopt});
  }
  for (auto& loop : loops) {
    loop.id = "e" + std::to_string(next_edge++);
    gog.edges.push_back(std::move(loop));
  }
  return gog;
}

GraphOfGroups collapse_to_j(const GraphOfGroups& j0) {
  GraphOfGroups out = j0;

  std::vector<std::string> doomed_vertices;
  std::vector<std::string> doomed_edges;

  for (const auto& black : j0.vertices) {
    if (black.color != NodeColor::black || j0.valence(black.id) != 2) continue;

    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < out.edges.size(); ++i) {
      const auto& e = out.edges[i];
      if (!e.loop && (e.ends[0] == black.id || e.ends[1] == black.id)) incident.push_back(i);
    }
    if (incident.size() != 2) continue;

    auto far_end = [&](std::size_t edge) -> const std::string& {
      const auto& e = out.edges[edge];
      return e.ends[0] == black.id ? e.ends[1] : e.ends[0];
    };
    auto block_of = [&](const std::string& id) -> const VertexSubset& { return out.find_vertex(id)->block; };

    auto keep = incident[0];
    auto drop = incident[1];
    if (block_of(far_end(drop)) < block_of(far_end(keep))) std::swap(keep, drop);
    // `keep` is the collapsed edge; `drop` survives, re-attached to the target.
    const auto target = far_end(keep);
    auto& moved = out.edges[drop];
    (moved.ends[0] == black.id ? moved.ends[0] : moved.ends[1]) = target;

    doomed_edges.push_back(out.edges[keep].id);
    doomed_vertices.push_back(black.id);
    for (auto& v : out.vertices) {
      if (v.id == target) v.absorbed.push_back(black.id);
    }
  }

  auto contains = [](const std::vector<std::string>& ids, const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  std::erase_if(out.edges, [&](const GoGEdge& e) { return contains(doomed_edges, e.id); });
  std::erase_if(out.vertices, [&](const GoGVertex& v) { return contains(doomed_vertices, v.id); });
  return out;
}

bool is_reduced(const GraphOfGroups& gog) {
  for (const auto& x : gog.vertices) {
    if (gog.valence(x.id) >= 3) continue;
    for (const auto& e : gog.edges) {
      if (e.ends[0] != x.id && e.ends[1] != x.id) continue;
      const bool proper = x.group.kind == GroupKind::raag && x.group.vertices.size() >= 2 &&
                          x.group.vertices.contains(e.group_vertex);
      if (!proper) return false;
    }
  }
  return true;
}

GraphOfGroups jsj(const SimplicialGraph& g) { return collapse_to_j(build_j0(g)); }

}  // namespace raag
