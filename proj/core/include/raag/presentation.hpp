#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/jsj.hpp"

namespace raag {

struct Letter {
  std::size_t generator;
  int exponent;  // +1 or -1

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(const Word& w);

/// Finitely presented group. Relators are stored freely reduced.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Appends r after free reduction; empty results are dropped.
  void add_relator(Word r);
  std::string format_word(const Word& w) const;
};

/// <vertices | [u, v] for every edge u < v>.
Presentation raag_presentation(const SimplicialGraph& g);

/// Fundamental group of a graph of groups. Spanning tree: breadth-first from
/// the least vertex id. Copies of a defining-graph vertex identified along
/// tree edges share one generator named after that vertex; non-tree edges add
/// a stable letter t with relator t a t^-1 b^-1. Throws DomainError when the
/// base graph is disconnected.
Presentation emit_presentation(const GraphOfGroups& gog);

/// Relators as strings, each normalized up to cyclic permutation and
/// inversion, and sorted. Two presentations on the same generator names with
/// equal normalized relator lists define the same group.
std::vector<std::string> normalized_relators(const Presentation& p);

}  // namespace raag
