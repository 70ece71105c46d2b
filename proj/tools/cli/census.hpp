#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "raag/graph.hpp"

namespace raag::cli {

/// Splitting statistics over the graphs of one order. Verdicts come from the
/// lowpoint path; `oracle_biconnected` recounts biconnectivity by vertex
/// removal, and `disagreements` counts graphs where the two paths differ.
struct CensusRow {
  std::size_t n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t connected = 0;
  std::uint64_t splits_over_Z = 0;
  std::uint64_t biconnected = 0;
  std::uint64_t oracle_biconnected = 0;
  std::uint64_t disagreements = 0;
  std::map<std::size_t, std::uint64_t> jsj_edge_histogram;

  bool consistent() const {
    return splits_over_Z + biconnected == connected && oracle_biconnected == biconnected && disagreements == 0;
  }
};

/// Folds one graph (order >= 3) into the row for its order.
void census_add(CensusRow& row, const SimplicialGraph& g);

/// Row over every labeled graph on n vertices, 3 <= n <= 6.
CensusRow census_row(std::size_t n);

/// Rows keyed by order over a stream of graphs; graphs below order three are
/// ignored. A nonempty `orders` restricts the census to those orders, each of
/// which gets a row even if no graph has it.
std::vector<CensusRow> census_rows(const std::vector<SimplicialGraph>& graphs, const std::vector<std::size_t>& orders);

}  // namespace raag::cli
