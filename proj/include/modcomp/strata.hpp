#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "modcomp/intlin.hpp"

namespace modcomp {

// Generic component criterion for a stratified abelian cone: strata carry a
// rank offset and a codimension; a stratum indexes an irreducible component
// iff its d-value is >= that of every stratum whose closure contains it.

struct Stratum {
  std::string id;
  i64 rank_offset = 0;  // rank on the stratum minus the generic rank
  i64 codim = 0;
};

// (a, b) present means stratum a lies in the closure of stratum b.
struct ClosureOrder {
  std::set<std::pair<std::string, std::string>> relation;
};

inline i64 d_value(const Stratum& s) { return s.rank_offset - s.codim; }

// Ids s with d(s) >= d(s') for every (s, s') in the relation. Requires the
// unique generic stratum (rank_offset 0, codim 0) to be present; unknown ids
// in the relation are an error.
std::set<std::string> component_strata(const std::vector<Stratum>& strata,
                                       const ClosureOrder& order);

// Elements not strictly contained in any other; containment pairs (a, b)
// mean a is contained in b.
std::set<std::string> maximal_cover(const std::vector<std::string>& elements,
                                    const std::set<std::pair<std::string, std::string>>& containment);

// dim of the preimage of a stratum: base dimension + generic rank + d.
inline i64 preimage_dimension(i64 base_dim, i64 generic_rank, const Stratum& s) {
  return base_dim + generic_rank + d_value(s);
}

}  // namespace modcomp
