#pragma once

#include <string>
#include <vector>

#include "modcomp/fanio.hpp"
#include "modcomp/pipeline.hpp"

namespace modcomp {

using NameMap = std::vector<std::pair<std::string, CurveClass>>;

// Short stable id for a tree (hex of FNV-1a over the canonical key).
std::string short_id(const CanonicalKey& key);

// One row per tree: id, decomposition, #E, d_G - d_G0, verdict, component.
std::string render_table(const ComponentReport& rep, const NameMap& names);

// Versioned machine-readable report; byte-stable across runs.
std::string render_json(const ComponentReport& rep, const NameMap& names);

// DOT for one tree: vertices "class | {marks}", undirected edges.
std::string tree_dot(const DecoratedTree& t, const NameMap& names);

// DOT of the contraction poset restricted to the report's trees: one node
// per tree, a directed edge for every single-edge contraction.
std::string poset_dot(const ComponentReport& rep, const NameMap& names);

}  // namespace modcomp
