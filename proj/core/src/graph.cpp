#include "raag/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <iterator>
#include <limits>
#include <sstream>

#include "raag/error.hpp"

namespace raag {

bool is_valid_vertex_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_';
  });
}

VertexSubset::VertexSubset(std::initializer_list<VertexId> members) : VertexSubset(std::vector<VertexId>(members)) {}

VertexSubset::VertexSubset(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSubset::contains(std::string_view v) const noexcept {
  auto it = std::lower_bound(members_.begin(), members_.end(), v,
                             [](const VertexId& a, std::string_view b) { return a < b; });
  return it != members_.end() && *it == v;
}

bool VertexSubset::is_subset_of(const VertexSubset& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

VertexSubset set_union(const VertexSubset& a, const VertexSubset& b) {
  std::vector<VertexId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSubset(std::move(out));
}

VertexSubset set_intersection(const VertexSubset& a, const VertexSubset& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSubset(std::move(out));
}

VertexSubset set_difference(const VertexSubset& a, const VertexSubset& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSubset(std::move(out));
}

SimplicialGraph SimplicialGraph::from_edges(std::vector<VertexId> vertices, const std::vector<Edge>& edges) {
  for (const auto& [u, v] : edges) {
    if (u == v) throw DomainError("self-loop at vertex '" + u + "'");
    vertices.push_back(u);
    vertices.push_back(v);
  }
  for (const auto& v : vertices) {
    if (!is_valid_vertex_name(v)) throw DomainError("invalid vertex name '" + v + "'");
  }

  SimplicialGraph g;
  g.names_ = VertexSubset(std::move(vertices)).members();
  g.adjacency_.resize(g.names_.size());
  for (const auto& [u, v] : edges) {
    const auto i = g.index(u);
    const auto j = g.index(v);
    g.adjacency_[i].push_back(j);
    g.adjacency_[j].push_back(i);
  }
  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    g.edge_count_ += row.size();
  }
  g.edge_count_ /= 2;
  return g;
}

std::optional<std::size_t> SimplicialGraph::find(std::string_view v) const noexcept {
  auto it = std::lower_bound(names_.begin(), names_.end(), v,
                             [](const VertexId& a, std::string_view b) { return a < b; });
  if (it == names_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t SimplicialGraph::index(std::string_view v) const {
  if (auto i = find(v)) return *i;
  throw DomainError("vertex '" + std::string(v) + "' is not in the graph");
}

bool SimplicialGraph::adjacent(std::size_t i, std::size_t j) const {
  const auto& row = adjacency_.at(i);
  return std::binary_search(row.begin(), row.end(), j);
}

bool SimplicialGraph::adjacent(std::string_view u, std::string_view v) const {
  auto i = find(u);
  auto j = find(v);
  return i && j && adjacent(*i, *j);
}

std::vector<Edge> SimplicialGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (auto j : adjacency_[i]) {
      if (i < j) out.emplace_back(names_[i], names_[j]);
    }
  }
  return out;
}

SimplicialGraph parse_graph(std::istream& in) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string tok; tokens >> tok;) parts.push_back(tok);
    if (parts.empty() || parts.front().front() == '#') continue;
    if (parts.size() > 2) throw ParseError(line_no, "expected one or two tokens, got " + std::to_string(parts.size()));
    for (const auto& tok : parts) {
      if (!is_valid_vertex_name(tok)) throw ParseError(line_no, "malformed token '" + tok + "'");
    }
    if (parts.size() == 1) {
      vertices.push_back(parts[0]);
    } else {
      if (parts[0] == parts[1]) throw ParseError(line_no, "self-loop at '" + parts[0] + "'");
      edges.emplace_back(parts[0], parts[1]);
    }
  }
  return SimplicialGraph::from_edges(std::move(vertices), edges);
}

SimplicialGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const VertexSubset& s) {
  for (const auto& v : s) {
    if (!g.contains(v)) throw DomainError("vertex '" + v + "' is not in the host graph");
  }
  std::vector<Edge> edges;
  for (const auto& v : s) {
    const auto i = g.index(v);
    for (auto j : g.neighbors(i)) {
      if (i < j && s.contains(g.name(j))) edges.emplace_back(v, g.name(j));
    }
  }
  return SimplicialGraph::from_edges(s.members(), edges);
}

namespace {

// Component label per vertex, labels assigned in order of least member.
std::vector<std::size_t> component_labels(const SimplicialGraph& g, std::size_t& count) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.order(), kUnset);
  std::vector<std::size_t> stack;
  count = 0;
  for (std::size_t root = 0; root < g.order(); ++root) {
    if (label[root] != kUnset) continue;
    label[root] = count;
    stack.push_back(root);
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : g.neighbors(x)) {
        if (label[y] == kUnset) {
          label[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

std::vector<VertexSubset> connected_components(const SimplicialGraph& g) {
  std::size_t count = 0;
  const auto label = component_labels(g, count);
  std::vector<std::vector<VertexId>> parts(count);
  for (std::size_t i = 0; i < g.order(); ++i) parts[label[i]].push_back(g.name(i));
  std::vector<VertexSubset> out;
  out.reserve(count);
  for (auto& p : parts) out.emplace_back(std::move(p));
  return out;
}

bool is_connected(const SimplicialGraph& g) {
  std::size_t count = 0;
  component_labels(g, count);
  return count <= 1;
}

std::optional<std::vector<VertexId>> shortest_path_avoiding(const SimplicialGraph& g, std::string_view u,
                                                            std::string_view w, std::string_view v) {
  const auto src = g.index(u);
  const auto dst = g.index(w);
  const auto banned = g.index(v);
  if (src == dst || src == banned || dst == banned) {
    throw DomainError("shortest_path_avoiding needs three distinct vertices");
  }

  // Distances to dst in g - banned; a greedy walk from src that always steps
  // to the least neighbor one layer closer yields the least shortest path.
  constexpr auto kFar = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kFar);
  std::deque<std::size_t> queue{dst};
  dist[dst] = 0;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto y : g.neighbors(x)) {
      if (y == banned || dist[y] != kFar) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  if (dist[src] == kFar) return std::nullopt;

  std::vector<VertexId> path{g.name(src)};
  for (auto x = src; x != dst;) {
    for (auto y : g.neighbors(x)) {
      if (y != banned && dist[y] + 1 == dist[x]) {
        x = y;
        break;
      }
    }
    path.push_back(g.name(x));
  }
  return path;
}

bool verify_hamiltonian_cycle(const SimplicialGraph& g, const CycleWitness& c) noexcept {
  const auto& seq = c.sequence;
  if (seq.size() < 3 || seq.size() != g.order()) return false;
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> idx;
  idx.reserve(seq.size());
  for (const auto& name : seq) {
    auto i = g.find(name);
    if (!i || seen[*i]) return false;
    seen[*i] = true;
    idx.push_back(*i);
  }
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (!g.adjacent(idx[k], idx[(k + 1) % idx.size()])) return false;
  }
  return true;
}

namespace {

void extend_cliques(const std::vector<std::uint64_t>& later_neighbors, std::uint64_t candidates, std::size_t depth,
                    std::vector<std::uint64_t>& counts) {
  while (candidates != 0) {
    const auto next = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    if (counts.size() <= depth + 1) counts.resize(depth + 2, 0);
    ++counts[depth + 1];
    extend_cliques(later_neighbors, candidates & later_neighbors[next], depth + 1, counts);
  }
}

}  // namespace

std::vector<std::uint64_t> clique_counts(const SimplicialGraph& g) {
  if (g.order() > kMaxCliqueVertices) {
    throw CapacityError("clique enumeration is limited to " + std::to_string(kMaxCliqueVertices) + " vertices");
  }
  std::vector<std::uint64_t> later(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (auto j : g.neighbors(i)) {
      if (j > i) later[i] |= std::uint64_t{1} << j;
    }
  }
  std::vector<std::uint64_t> counts{1};
  const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  extend_cliques(later, all, 0, counts);
  return counts;
}

std::int64_t euler_characteristic(const SimplicialGraph& g) {
  std::int64_t chi = 0;
  const auto counts = clique_counts(g);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const auto term = static_cast<std::int64_t>(counts[k]);
    chi += (k % 2 == 0) ? term : -term;
  }
  return chi;
}

}  // namespace raag
