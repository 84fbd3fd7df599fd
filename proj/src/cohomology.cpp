#include "modcomp/cohomology.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace modcomp {

i64 h0_tree(const DegreeTree& t) {
  int n = static_cast<int>(t.deg.size());
  if (n == 0) throw std::invalid_argument("h0_tree: empty tree");
  if (static_cast<int>(t.edges.size()) != n - 1)
    throw std::invalid_argument("h0_tree: edge count != vertices - 1");

  std::vector<int> col_base(n, -1);
  int ncols = 0;
  for (int v = 0; v < n; ++v) {
    if (t.deg[v] >= 0) {
      col_base[v] = ncols;
      ncols += static_cast<int>(t.deg[v]) + 1;
    }
  }
  IMat m(static_cast<int>(t.edges.size()), ncols);
  std::vector<int> incident(n, 0);
  for (size_t e = 0; e < t.edges.size(); ++e) {
    auto [a, b] = t.edges[e];
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw std::invalid_argument("h0_tree: bad edge");
    int sgn = 1;
    for (int v : {a, b}) {
      ++incident[v];
      i128 x = incident[v];
      if (col_base[v] >= 0) {
        i128 pw = 1;
        for (i64 j = 0; j <= t.deg[v]; ++j) {
          m.at(static_cast<int>(e), col_base[v] + static_cast<int>(j)) += sgn * pw;
          pw *= x;
          check_range(pw);
        }
      }
      sgn = -sgn;
    }
  }
  int rank = rank_bareiss(std::move(m));
  return ncols - rank;
}

i64 h1_tree(const DegreeTree& t) {
  i64 chi = std::accumulate(t.deg.begin(), t.deg.end(), i64(0)) + 1;
  i64 h1 = h0_tree(t) - chi;
  if (h1 < 0) {
    // h1 >= 0 always; a negative value means the rank computation is broken
    std::abort();
  }
  return h1;
}

CohomologyResult cohomology(const DegreeTree& t) {
  CohomologyResult r;
  r.h0 = h0_tree(t);
  i64 chi = std::accumulate(t.deg.begin(), t.deg.end(), i64(0)) + 1;
  r.h1 = r.h0 - chi;
  if (r.h1 < 0) std::abort();
  return r;
}

}  // namespace modcomp
