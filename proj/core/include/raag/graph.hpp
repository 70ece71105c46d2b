#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

/// Vertex name: a nonempty token over [A-Za-z0-9_]. Names order lexicographically.
using VertexId = std::string;

bool is_valid_vertex_name(std::string_view name) noexcept;

/// Sorted, duplicate-free set of vertex names.
class VertexSubset {
 public:
  using const_iterator = std::vector<VertexId>::const_iterator;

  VertexSubset() = default;
  VertexSubset(std::initializer_list<VertexId> members);
  explicit VertexSubset(std::vector<VertexId> members);

  bool contains(std::string_view v) const noexcept;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<VertexId>& members() const noexcept { return members_; }
  const VertexId& front() const { return members_.front(); }

  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  bool is_subset_of(const VertexSubset& other) const;

  friend auto operator<=>(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<VertexId> members_;
};

VertexSubset set_union(const VertexSubset& a, const VertexSubset& b);
VertexSubset set_intersection(const VertexSubset& a, const VertexSubset& b);
VertexSubset set_difference(const VertexSubset& a, const VertexSubset& b);

using Edge = std::pair<VertexId, VertexId>;

/// Finite simple graph with named vertices; the defining graph of a RAAG.
///
/// Vertices are stored in lexicographic order of their names, so the index of a
/// vertex is its rank and index comparisons are name comparisons. Adjacency
/// lists are sorted. Instances are immutable once built.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Builds a graph from declared vertices and edges. Edge endpoints are
  /// declared implicitly; duplicates merge. Throws DomainError on a self-loop
  /// or an invalid vertex name.
  static SimplicialGraph from_edges(std::vector<VertexId> vertices, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return names_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return names_.empty(); }

  const std::vector<VertexId>& vertices() const noexcept { return names_; }
  VertexSubset vertex_set() const { return VertexSubset(names_); }
  const VertexId& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(std::string_view v) const noexcept;
  /// Index of v; throws DomainError if v is not a vertex.
  std::size_t index(std::string_view v) const;
  bool contains(std::string_view v) const noexcept { return find(v).has_value(); }

  std::span<const std::size_t> neighbors(std::size_t i) const { return adjacency_.at(i); }
  std::size_t degree(std::size_t i) const { return adjacency_.at(i).size(); }
  bool adjacent(std::size_t i, std::size_t j) const;
  bool adjacent(std::string_view u, std::string_view v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimplicialGraph&, const SimplicialGraph&) = default;

 private:
  std::vector<VertexId> names_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Hamiltonian cycle candidate: vertex sequence read cyclically.
struct CycleWitness {
  std::vector<VertexId> sequence;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Parses the line-oriented edge-list format: one token declares a vertex, two
/// tokens declare an edge, `#` starts a comment line. Throws ParseError.
SimplicialGraph parse_graph(std::istream& in);
SimplicialGraph parse_graph(std::string_view text);

/// Throws DomainError if s is not contained in g's vertex set.
SimplicialGraph induced_subgraph(const SimplicialGraph& g, const VertexSubset& s);

/// Connected components ordered by their least vertex.
std::vector<VertexSubset> connected_components(const SimplicialGraph& g);
bool is_connected(const SimplicialGraph& g);

/// Shortest u-w path in g - {v}; among shortest paths, the lexicographically
/// least vertex sequence. Returns nullopt when v separates u from w.
std::optional<std::vector<VertexId>> shortest_path_avoiding(const SimplicialGraph& g, std::string_view u,
                                                            std::string_view w, std::string_view v);

/// True iff c visits every vertex of g exactly once along edges of g (cyclically).
bool verify_hamiltonian_cycle(const SimplicialGraph& g, const CycleWitness& c) noexcept;

/// Maximum order accepted by clique_counts.
inline constexpr std::size_t kMaxCliqueVertices = 64;

/// Entry k is the number of k-cliques; entry 0 is 1. Throws CapacityError above
/// kMaxCliqueVertices vertices.
std::vector<std::uint64_t> clique_counts(const SimplicialGraph& g);

/// Alternating clique sum: the Euler characteristic of the Salvetti complex.
std::int64_t euler_characteristic(const SimplicialGraph& g);

}  // namespace raag
