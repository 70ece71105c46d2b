#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "raag/graph.hpp"

namespace raag {

/// Largest order for exhaustive labeled enumeration (2^28 graphs at n = 8).
inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// Number of labeled graphs on n vertices, 2^(n choose 2).
std::uint64_t labeled_graph_count(std::size_t n);

/// The labeled graph on vertices indexed_vertex_name(0..n-1) whose edge set is
/// given by `mask`, bit k standing for the k-th pair (i, j), i < j, in
/// lexicographic order of pairs.
SimplicialGraph labeled_graph(std::size_t n, std::uint64_t mask);

/// Calls `visit` once per labeled graph on n vertices, in mask order.
void for_each_labeled_graph(std::size_t n, const std::function<void(const SimplicialGraph&)>& visit);

}  // namespace raag
