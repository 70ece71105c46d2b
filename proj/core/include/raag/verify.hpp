#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/jsj.hpp"
#include "raag/presentation.hpp"
#include "raag/smith.hpp"

namespace raag {

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // divisors greater than one

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Relation matrix of exponent sums: one row per relator, one column per generator.
IntegerMatrix relation_matrix(const Presentation& p);

AbelianInvariants abelianization(const Presentation& p);

/// Euler characteristic of A(S) for a group descriptor, via the clique counts of
/// the induced subgraph on S.
std::int64_t euler_characteristic(const SimplicialGraph& g, const GroupDescriptor& group);

/// chi(A(g)) equals the sum of the vertex-group characteristics; edge groups
/// are infinite cyclic and contribute zero.
bool check_euler(const SimplicialGraph& g, const GraphOfGroups& gog);

/// Raag subsets, cyclic generators and stable letters together cover the
/// vertices of g, and every edge-group generator is a cut vertex of g.
bool check_coverage(const SimplicialGraph& g, const GraphOfGroups& gog);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Reducedness, Euler identity, coverage and the abelianization round trip for
/// `gog` against its defining graph `g`.
std::vector<CheckResult> run_checks(const SimplicialGraph& g, const GraphOfGroups& gog);

}  // namespace raag
