#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modcomp/fan.hpp"

namespace modcomp {

enum class Mode { maps, quasimaps };

// A marked tree with a curve class on each vertex. Mark i+1 sits on vertex
// marks[i]; marks are distinguishable.
struct DecoratedTree {
  std::vector<CurveClass> cls;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> marks;
};

bool is_tree(const DecoratedTree& t);
CurveClass class_sum(const DecoratedTree& t);
std::vector<int> valences(const DecoratedTree& t);

// maps: every class-0 vertex has marks + valence >= 3.
// quasimaps: additionally every vertex has marks + valence >= 2.
bool is_stable(const DecoratedTree& t, Mode mode);

// AHU-style canonical encoding rooted at the tree center (smaller of the two
// encodings when bicentral); vertex label = (class coords, sorted marks).
// Equal keys iff isomorphic as decorated marked trees.
using CanonicalKey = std::string;
CanonicalKey canonical_form(const DecoratedTree& t);

// All isomorphism classes of stable decorated n-marked trees of class beta
// whose nonzero vertex classes lie in class_set. Zero vertices are attached
// up to the bound #zero <= #nonzero + n - 2 (for >= 2 parts; n - 1 for one).
std::vector<DecoratedTree> enumerate_trees(const ToricBasis& basis, const CurveClass& beta, int n,
                                           const std::vector<CurveClass>& class_set, Mode mode,
                                           int max_parts = -1);

// All isomorphism classes obtainable by contracting edge subsets, including
// the tree itself and the one-vertex full contraction. Contraction merges
// endpoints, adds classes and unions marks; computed via union-find.
std::vector<DecoratedTree> contraction_closure(const DecoratedTree& t);

// Single-edge contraction (used for the contraction-poset output).
DecoratedTree contract_edges(const DecoratedTree& t, const std::vector<int>& edge_indices);

}  // namespace modcomp
