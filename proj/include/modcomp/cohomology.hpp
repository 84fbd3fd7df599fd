#pragma once

#include <utility>
#include <vector>

#include "modcomp/intlin.hpp"

namespace modcomp {

// A genus-0 nodal curve presented by its dual tree plus the degree of the
// line bundle on each component. Degrees may be negative.
struct DegreeTree {
  std::vector<i64> deg;                   // d_v per vertex
  std::vector<std::pair<int, int>> edges; // must form a tree
};

struct CohomologyResult {
  i64 h0 = 0;
  i64 h1 = 0;
};

// h^0 via the evaluation matrix: one block of d_v+1 monomial columns per
// vertex with d_v >= 0, the node of the i-th incident edge at v sitting at
// affine coordinate x = i, one gluing row per edge; h0 = cols - rank.
// Exact fraction-free rank, so the result is exact.
i64 h0_tree(const DegreeTree& t);

// h0 - (sum deg + 1); aborts if negative, which would indicate a rank bug.
i64 h1_tree(const DegreeTree& t);

CohomologyResult cohomology(const DegreeTree& t);

}  // namespace modcomp
