#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

enum class ZSplitVerdict { yes, no, hnn_small_case };

std::string_view to_string(ZSplitVerdict verdict) noexcept;

/// Two induced subgraphs meeting in one vertex v and covering the graph, so
/// that A(G) = A(gamma1) *_{A(v)} A(gamma2).
struct ZSplitWitness {
  VertexSubset gamma1;
  VertexSubset gamma2;
  VertexId v;

  friend bool operator==(const ZSplitWitness&, const ZSplitWitness&) = default;
};

/// Path u - v - w through two edges. Stored normalized with u < w.
struct Segment {
  VertexId u;
  VertexId v;
  VertexId w;

  static Segment normalized(VertexId u, VertexId v, VertexId w);

  friend auto operator<=>(const Segment&, const Segment&) = default;
};

struct CoverEntry {
  VertexSubset delta;
  CycleWitness cycle;

  friend bool operator==(const CoverEntry&, const CoverEntry&) = default;
};

/// For every two-edge segment, an induced subgraph containing it together with
/// a Hamiltonian cycle of that subgraph. Certifies that A(G) has no splitting
/// over Z.
struct NonSplitCover {
  std::map<Segment, CoverEntry> entries;

  friend bool operator==(const NonSplitCover&, const NonSplitCover&) = default;
};

/// The groups on one or two generators: Z, F2 and Z^2.
enum class SmallCase { Z, F2, Z2 };

std::string_view to_string(SmallCase tag) noexcept;

struct SmallCaseWitness {
  SmallCase tag;

  friend bool operator==(const SmallCaseWitness&, const SmallCaseWitness&) = default;
};

using Witness = std::variant<ZSplitWitness, NonSplitCover, SmallCaseWitness>;

struct SplitReport {
  bool free_split = false;
  /// Present exactly when free_split: first component versus the rest.
  std::optional<std::vector<VertexSubset>> free_partition;
  ZSplitVerdict z_split = ZSplitVerdict::no;
  Witness witness;
};

struct FreeSplitResult {
  bool splits = false;
  std::optional<std::vector<VertexSubset>> partition;
};

/// A(G) is a nontrivial free product iff G is disconnected. Needs >= 2 vertices.
FreeSplitResult splits_freely(const SimplicialGraph& g);

/// Full splitting verdict with witness. Throws EmptyGraphError on the empty graph.
SplitReport splits_over_Z(const SimplicialGraph& g);

/// Amalgam witness for a graph on >= 3 vertices that is not biconnected.
ZSplitWitness z_split_witness(const SimplicialGraph& g);

/// Two-edge segments of g, normalized and sorted.
std::vector<Segment> two_edge_segments(const SimplicialGraph& g);

/// Hamiltonian cover built from shortest avoiding paths. Needs g biconnected
/// with >= 3 vertices.
NonSplitCover nonsplit_cover(const SimplicialGraph& g);

/// Human-readable defects of a cover; empty iff the cover certifies g.
std::vector<std::string> cover_defects(const SimplicialGraph& g, const NonSplitCover& cover);
bool verify_cover(const SimplicialGraph& g, const NonSplitCover& cover);

/// Defects of an amalgam witness: sides cover g, meet in {v}, are proper, and
/// no edge of g joins gamma1 - v to gamma2 - v.
std::vector<std::string> z_witness_defects(const SimplicialGraph& g, const ZSplitWitness& w);
bool verify_z_witness(const SimplicialGraph& g, const ZSplitWitness& w);

}  // namespace raag
