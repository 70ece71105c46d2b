#include "raag/verify.hpp"

#include <sstream>

#include "raag/blocks.hpp"

namespace raag {

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (const auto& l : p.relators[r]) m(r, l.generator) += l.exponent;
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  const auto divisors = smith_normal_form(relation_matrix(p));
  AbelianInvariants out;
  out.free_rank = p.generators.size() - divisors.size();
  for (const auto& d : divisors) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

std::int64_t euler_characteristic(const SimplicialGraph& g, const GroupDescriptor& group) {
  return euler_characteristic(induced_subgraph(g, group.vertices));
}

bool check_euler(const SimplicialGraph& g, const GraphOfGroups& gog) {
  std::int64_t sum = 0;
  for (const auto& x : gog.vertices) sum += euler_characteristic(g, x.group);
  return sum == euler_characteristic(g);
}

bool check_coverage(const SimplicialGraph& g, const GraphOfGroups& gog) {
  std::vector<VertexId> seen;
  for (const auto& x : gog.vertices) seen.insert(seen.end(), x.group.vertices.begin(), x.group.vertices.end());
  for (const auto& e : gog.edges) {
    if (e.stable_letter) seen.push_back(*e.stable_letter);
  }
  if (VertexSubset(std::move(seen)) != g.vertex_set()) return false;

  const auto cuts = cut_vertices(g);
  for (const auto& e : gog.edges) {
    if (!cuts.contains(e.group_vertex)) return false;
  }
  return true;
}

std::vector<CheckResult> run_checks(const SimplicialGraph& g, const GraphOfGroups& gog) {
  std::vector<CheckResult> out;
  out.push_back({"reduced", is_reduced(gog), ""});

  std::ostringstream chi;
  chi << "chi=" << euler_characteristic(g);
  out.push_back({"euler", check_euler(g, gog), chi.str()});

  out.push_back({"coverage", check_coverage(g, gog), ""});

  const auto ab = abelianization(emit_presentation(gog));
  std::ostringstream detail;
  detail << "(" << ab.free_rank << ",[";
  for (std::size_t i = 0; i < ab.torsion.size(); ++i) detail << (i ? "," : "") << ab.torsion[i].get_str();
  detail << "])";
  const bool free_abelian = ab.free_rank == g.order() && ab.torsion.empty();
  out.push_back({"abelianization", free_abelian, detail.str()});
  return out;
}

}  // namespace raag
