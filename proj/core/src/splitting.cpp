#include "raag/splitting.hpp"

#include <algorithm>
#include <utility>

#include "raag/blocks.hpp"
#include "raag/error.hpp"

namespace raag {

std::string_view to_string(ZSplitVerdict verdict) noexcept {
  switch (verdict) {
    case ZSplitVerdict::yes: return "yes";
    case ZSplitVerdict::no: return "no";
    case ZSplitVerdict::hnn_small_case: return "hnn_small_case";
  }
  return "?";
}

std::string_view to_string(SmallCase tag) noexcept {
  switch (tag) {
    case SmallCase::Z: return "Z";
    case SmallCase::F2: return "F2";
    case SmallCase::Z2: return "Z^2";
  }
  return "?";
}

Segment Segment::normalized(VertexId u, VertexId v, VertexId w) {
  if (w < u) std::swap(u, w);
  return Segment{std::move(u), std::move(v), std::move(w)};
}

FreeSplitResult splits_freely(const SimplicialGraph& g) {
  if (g.order() < 2) throw DomainError("free splitting is decided for graphs with at least two vertices");
  auto components = connected_components(g);
  if (components.size() < 2) return {};
  auto first = components.front();
  auto rest = set_difference(g.vertex_set(), first);
  return {true, std::vector<VertexSubset>{std::move(first), std::move(rest)}};
}

ZSplitWitness z_split_witness(const SimplicialGraph& g) {
  if (g.order() < 3) throw DomainError("amalgam witnesses need at least three vertices");
  const auto all = g.vertex_set();

  const auto cuts = cut_vertices(g);
  if (!cuts.empty()) {
    const auto& v = cuts.front();
    VertexSubset without_v = set_difference(all, VertexSubset{v});
    const auto pieces = connected_components(induced_subgraph(g, without_v));
    auto gamma1 = set_union(pieces.front(), VertexSubset{v});
    auto gamma2 = set_union(set_difference(all, pieces.front()), VertexSubset{v});
    return {std::move(gamma1), std::move(gamma2), v};
  }

  const auto components = connected_components(g);
  if (components.size() < 2) throw DomainError("graph is biconnected; A(G) does not split over Z");

  const auto& first = components.front();
  auto rest = set_difference(all, first);
  if (rest.size() >= 2) {
    const auto v = rest.front();
    return {set_union(first, VertexSubset{v}), std::move(rest), v};
  }
  // The complement of the first component is a single vertex x: glue x to the
  // least vertex of the first component instead.
  const auto& x = rest.front();
  const auto v = first.front();
  return {VertexSubset{x, v}, first, v};
}

std::vector<Segment> two_edge_segments(const SimplicialGraph& g) {
  std::vector<Segment> out;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        out.push_back(Segment{g.name(nbrs[a]), g.name(v), g.name(nbrs[b])});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NonSplitCover nonsplit_cover(const SimplicialGraph& g) {
  if (g.order() < 3 || !is_biconnected(g)) {
    throw DomainError("a Hamiltonian cover exists only for biconnected graphs with at least three vertices");
  }
  NonSplitCover cover;
  for (auto& seg : two_edge_segments(g)) {
    auto path = shortest_path_avoiding(g, seg.u, seg.w, seg.v);
    if (!path) throw DomainError("vertex '" + seg.v + "' separates its neighbors");
    CycleWitness cycle;
    cycle.sequence.reserve(path->size() + 1);
    cycle.sequence.push_back(seg.v);
    cycle.sequence.insert(cycle.sequence.end(), path->begin(), path->end());
    auto delta = VertexSubset(cycle.sequence);
    cover.entries.emplace(std::move(seg), CoverEntry{std::move(delta), std::move(cycle)});
  }
  return cover;
}

std::vector<std::string> cover_defects(const SimplicialGraph& g, const NonSplitCover& cover) {
  std::vector<std::string> defects;
  auto describe = [](const Segment& s) { return s.u + "-" + s.v + "-" + s.w; };

  for (const auto& seg : two_edge_segments(g)) {
    if (!cover.entries.contains(seg)) defects.push_back("segment " + describe(seg) + " is not covered");
  }
  for (const auto& [seg, entry] : cover.entries) {
    const auto name = describe(seg);
    if (!(seg.u < seg.w) || !g.adjacent(seg.u, seg.v) || !g.adjacent(seg.v, seg.w)) {
      defects.push_back("key " + name + " is not a two-edge segment");
      continue;
    }
    if (entry.delta.size() < 3) {
      defects.push_back(name + ": subgraph has fewer than three vertices");
      continue;
    }
    if (!entry.delta.contains(seg.u) || !entry.delta.contains(seg.v) || !entry.delta.contains(seg.w)) {
      defects.push_back(name + ": subgraph does not contain the segment");
      continue;
    }
    if (!entry.delta.is_subset_of(g.vertex_set())) {
      defects.push_back(name + ": subgraph has vertices outside the graph");
      continue;
    }
    if (!verify_hamiltonian_cycle(induced_subgraph(g, entry.delta), entry.cycle)) {
      defects.push_back(name + ": cycle is not Hamiltonian in the induced subgraph");
    }
  }
  return defects;
}

bool verify_cover(const SimplicialGraph& g, const NonSplitCover& cover) { return cover_defects(g, cover).empty(); }

std::vector<std::string> z_witness_defects(const SimplicialGraph& g, const ZSplitWitness& w) {
  std::vector<std::string> defects;
  const auto all = g.vertex_set();
  if (set_union(w.gamma1, w.gamma2) != all) defects.push_back("sides do not cover the vertex set");
  if (set_intersection(w.gamma1, w.gamma2) != VertexSubset{w.v}) defects.push_back("sides do not meet in {v}");
  if (w.gamma1 == all || w.gamma2 == all || !w.gamma1.is_subset_of(all) || !w.gamma2.is_subset_of(all)) {
    defects.push_back("sides are not proper subsets of the vertex set");
  }
  for (const auto& [a, b] : g.edges()) {
    const bool in1 = w.gamma1.contains(a) && w.gamma1.contains(b);
    const bool in2 = w.gamma2.contains(a) && w.gamma2.contains(b);
    if (!in1 && !in2) defects.push_back("edge " + a + "-" + b + " lies in neither side");
  }
  return defects;
}

bool verify_z_witness(const SimplicialGraph& g, const ZSplitWitness& w) { return z_witness_defects(g, w).empty(); }

SplitReport splits_over_Z(const SimplicialGraph& g) {
  if (g.empty()) throw EmptyGraphError("splitting is undefined for the empty graph");

  SplitReport report;
  if (g.order() == 1) {
    report.z_split = ZSplitVerdict::no;
    report.witness = SmallCaseWitness{SmallCase::Z};
    return report;
  }

  auto free = splits_freely(g);
  report.free_split = free.splits;
  report.free_partition = std::move(free.partition);

  if (g.order() == 2) {
    report.z_split = ZSplitVerdict::hnn_small_case;
    report.witness = SmallCaseWitness{g.size() == 1 ? SmallCase::Z2 : SmallCase::F2};
    return report;
  }

  if (is_biconnected(g)) {
    report.z_split = ZSplitVerdict::no;
    report.witness = nonsplit_cover(g);
  } else {
    report.z_split = ZSplitVerdict::yes;
    report.witness = z_split_witness(g);
  }
  return report;
}

}  // namespace raag
