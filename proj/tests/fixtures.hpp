#pragma once

// Shared test fixtures: the two reference fans and the named trees from the
// published component tables for Bl_pt P^2 in degrees 2l and 3l.

#include <vector>

#include "modcomp/pipeline.hpp"
#include "modcomp/trees.hpp"

namespace fx {

using namespace modcomp;

inline Fan blp2_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {{-1, -1}, {1, 0}, {0, 1}, {1, 1}};
  f.max_cones = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return f;
}

inline Fan p2_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {{-1, -1}, {1, 0}, {0, 1}};
  f.max_cones = {{0, 1}, {0, 2}, {1, 2}};
  return f;
}

// sigma = cone {1,3}: pic rays {0,2}, coords (g.D0, g.D2) = (a, b) for
// g = a s + b e. So s=(1,0), e=(0,1), l=(1,1).
inline ToricBasis blp2_basis_13() { return build_basis(blp2_fan(), 2); }
// sigma = cone {0,2}: pic rays {1,3}, coords (g.D1, g.D3) = (b, a-b).
inline ToricBasis blp2_basis_02() { return build_basis(blp2_fan(), 1); }

inline ToricBasis p2_basis() { return build_basis(p2_fan(), 2); }

// class a*s + b*e in the {1,3}-basis coordinates
inline CurveClass se(i64 a, i64 b) { return {a, b}; }

struct NamedTree {
  const char* name;
  DecoratedTree tree;
};

inline DecoratedTree chain(std::vector<CurveClass> cls) {
  DecoratedTree t;
  t.cls = std::move(cls);
  for (int i = 0; i + 1 < static_cast<int>(t.cls.size()); ++i) t.edges.push_back({i, i + 1});
  return t;
}

inline DecoratedTree star(CurveClass center, std::vector<CurveClass> legs) {
  DecoratedTree t;
  t.cls.push_back(std::move(center));
  for (auto& l : legs) {
    t.edges.push_back({0, static_cast<int>(t.cls.size())});
    t.cls.push_back(std::move(l));
  }
  return t;
}

// The published 2l table (G0..G23), in the {1,3}-basis.
inline std::vector<NamedTree> table_2l() {
  auto s = se(1, 0), e = se(0, 1), l = se(1, 1), z = se(0, 0);
  auto caterpillar = [&](std::vector<CurveClass> spine, std::vector<CurveClass> tail_legs) {
    // spine v0-..-vk, extra legs on the last spine vertex
    DecoratedTree t = chain(std::move(spine));
    int hub = static_cast<int>(t.cls.size()) - 1;
    for (auto& lg : tail_legs) {
      t.edges.push_back({hub, static_cast<int>(t.cls.size())});
      t.cls.push_back(std::move(lg));
    }
    return t;
  };
  std::vector<NamedTree> v;
  v.push_back({"G0", chain({se(2, 2)})});
  v.push_back({"G1", chain({se(2, 0), se(0, 2)})});
  v.push_back({"G2", chain({s, s, se(0, 2)})});
  v.push_back({"G3", chain({s, se(0, 2), s})});
  v.push_back({"G4", star(z, {s, s, se(0, 2)})});
  v.push_back({"G5", chain({s, se(1, 2)})});
  v.push_back({"G6", chain({e, se(2, 1)})});
  v.push_back({"G7", chain({l, l})});
  v.push_back({"G8", chain({e, e, se(2, 0)})});
  v.push_back({"G9", chain({e, se(2, 0), e})});
  v.push_back({"G10", star(z, {e, e, se(2, 0)})});
  v.push_back({"G11", chain({s, e, l})});
  v.push_back({"G12", chain({s, l, e})});
  v.push_back({"G13", chain({l, s, e})});
  v.push_back({"G14", star(z, {s, l, e})});
  v.push_back({"G15", chain({s, s, e, e})});
  v.push_back({"G16", chain({s, e, s, e})});
  v.push_back({"G17", chain({s, e, e, s})});
  v.push_back({"G18", caterpillar({s, s, z}, {e, e})});
  v.push_back({"G19", caterpillar({s, e, z}, {s, e})});
  v.push_back({"G20", caterpillar({e, s, z}, {s, e})});
  v.push_back({"G21", caterpillar({e, e, z}, {s, s})});
  {
    DecoratedTree t;  // (s,s)-0-0-(e,e)
    t.cls = {s, s, z, z, e, e};
    t.edges = {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}};
    v.push_back({"G22", t});
  }
  {
    DecoratedTree t;  // (s,e)-0-0-(s,e)
    t.cls = {s, e, z, z, s, e};
    t.edges = {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}};
    v.push_back({"G23", t});
  }
  return v;
}

// The four stable 2l trees over the partition (s,s,e,e) that the published
// table omits; all score d - d0 < 0, so the component list is unchanged.
inline std::vector<NamedTree> table_2l_omitted() {
  auto s = se(1, 0), e = se(0, 1), z = se(0, 0);
  std::vector<NamedTree> v;
  v.push_back({"chain-esse", chain({e, s, s, e})});
  v.push_back({"star-s", star(s, {s, e, e})});
  v.push_back({"star-e", star(e, {s, s, e})});
  v.push_back({"star-0-4legs", star(z, {s, s, e, e})});
  return v;
}

// Degree-3l trees named in the published figure, plus the two discussed
// rejections.
inline std::vector<NamedTree> fig_3l() {
  std::vector<NamedTree> v;
  v.push_back({"H0", chain({se(3, 3)})});
  v.push_back({"H1", chain({se(3, 2), se(0, 1)})});   // (3s+2e | e)
  v.push_back({"H2", chain({se(3, 0), se(0, 3)})});   // (3s | 3e)
  v.push_back({"H3", chain({se(3, 1), se(0, 2)})});   // (3s+e | 2e)
  v.push_back({"H4", chain({se(2, 0), se(0, 3), se(1, 0)})});  // (2s, 3e, s)
  v.push_back({"H5", chain({se(2, 0), se(0, 2), se(1, 1)})});  // (2s, 2e, s+e)
  v.push_back({"H6", chain({se(3, 0), se(0, 2), se(0, 1)})});
  v.push_back({"H7", chain({se(2, 0), se(1, 0), se(0, 3)})});
  v.push_back({"H8", chain({se(1, 0), se(2, 0), se(0, 3)})});
  v.push_back({"H9", chain({se(3, 0), se(0, 1), se(0, 2)})});
  v.push_back({"HX", chain({se(1, 3), se(2, 0)})});   // (s+3e | 2s)
  return v;
}

// The 2-marked trees of the published n=2 figure: the single vertex and the
// four mark placements on (2s | 2e).
inline std::vector<NamedTree> fig_2l_n2() {
  std::vector<NamedTree> v;
  auto mk = [](DecoratedTree t, std::vector<int> marks) {
    t.marks = std::move(marks);
    return t;
  };
  v.push_back({"M0", mk(chain({se(2, 2)}), {0, 0})});
  v.push_back({"M1", mk(chain({se(2, 0), se(0, 2)}), {0, 1})});
  v.push_back({"M2", mk(chain({se(2, 0), se(0, 2)}), {1, 0})});
  v.push_back({"M3", mk(chain({se(2, 0), se(0, 2)}), {1, 1})});
  v.push_back({"M4", mk(chain({se(2, 0), se(0, 2)}), {0, 0})});
  return v;
}

}  // namespace fx
