#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

enum class GroupKind { raag, cyclic };

std::string_view to_string(GroupKind kind) noexcept;

/// Vertex or edge group: A(S) for an induced subgraph S of the defining graph,
/// or the infinite cyclic group A(v) on one vertex.
struct GroupDescriptor {
  GroupKind kind = GroupKind::raag;
  VertexSubset vertices;

  static GroupDescriptor raag(VertexSubset s);
  static GroupDescriptor cyclic(VertexId v);

  /// Generator of a cyclic descriptor.
  const VertexId& generator() const { return vertices.front(); }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

enum class NodeColor { black, white };

std::string_view to_string(NodeColor color) noexcept;

struct GoGVertex {
  std::string id;
  NodeColor color = NodeColor::white;
  GroupDescriptor group;
  bool toral = false;
  bool hanging = false;
  /// Block (white) or {cut vertex} (black) this vertex came from.
  VertexSubset block;
  /// Ids of black vertices collapsed into this one.
  std::vector<std::string> absorbed;

  friend bool operator==(const GoGVertex&, const GoGVertex&) = default;
};

/// Edge with infinite cyclic group A(group_vertex). inclusion[k] is the image
/// generator inside the group of ends[k]. Loops carry a stable letter.
struct GoGEdge {
  std::string id;
  std::array<std::string, 2> ends;
  VertexId group_vertex;
  std::array<VertexId, 2> inclusion;
  bool loop = false;
  std::optional<VertexId> stable_letter;

  friend bool operator==(const GoGEdge&, const GoGEdge&) = default;
};

struct GraphOfGroups {
  std::vector<GoGVertex> vertices;
  std::vector<GoGEdge> edges;
  SimplicialGraph source_graph;

  const GoGVertex* find_vertex(std::string_view id) const;
  /// Incident edge ends; a loop counts twice.
  std::size_t valence(std::string_view id) const;
  bool base_connected() const;

  friend bool operator==(const GraphOfGroups&, const GraphOfGroups&) = default;
};

/// Block tree with one loop attached at every hanging vertex. Requires g
/// connected with at least three vertices (JsjPreconditionError otherwise).
GraphOfGroups build_j0(const SimplicialGraph& g);

/// Collapses one edge at every black vertex of valence two, toward the white
/// neighbor whose block is least.
GraphOfGroups collapse_to_j(const GraphOfGroups& j0);

/// Every vertex of valence below three has all incident edge groups properly
/// contained in its vertex group.
bool is_reduced(const GraphOfGroups& gog);

/// The JSJ decomposition: collapse_to_j(build_j0(g)).
GraphOfGroups jsj(const SimplicialGraph& g);

}  // namespace raag
