#include "cli/census.hpp"

#include <string>

#include "raag/blocks.hpp"
#include "raag/enumerate.hpp"
#include "raag/error.hpp"
#include "raag/jsj.hpp"
#include "raag/splitting.hpp"

namespace raag::cli {

void census_add(CensusRow& row, const SimplicialGraph& g) {
  ++row.graphs;
  if (!is_connected(g)) return;
  ++row.connected;

  const auto report = splits_over_Z(g);
  const bool splits = report.z_split == ZSplitVerdict::yes;
  if (splits) {
    ++row.splits_over_Z;
  } else {
    ++row.biconnected;
  }

  const bool oracle_biconnected = cut_vertices_by_removal(g).empty();
  if (oracle_biconnected) ++row.oracle_biconnected;
  if (oracle_biconnected == splits) ++row.disagreements;

  ++row.jsj_edge_histogram[jsj(g).edges.size()];
}

CensusRow census_row(std::size_t n) {
  if (n < 3 || n > 6) throw DomainError("census order must lie in [3, 6], got " + std::to_string(n));
  CensusRow row;
  row.n = n;
  for_each_labeled_graph(n, [&row](const SimplicialGraph& g) { census_add(row, g); });
  return row;
}

std::vector<CensusRow> census_rows(const std::vector<SimplicialGraph>& graphs, const std::vector<std::size_t>& orders) {
  std::map<std::size_t, CensusRow> rows;
  for (auto n : orders) rows[n].n = n;
  for (const auto& g : graphs) {
    if (g.order() < 3) continue;
    if (!orders.empty() && !rows.contains(g.order())) continue;
    auto& row = rows[g.order()];
    row.n = g.order();
    census_add(row, g);
  }
  std::vector<CensusRow> out;
  for (auto& [n, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace raag::cli
